#pragma once

// Integer partitions: the shared index language for symmetric-group classes
// (cycle types) and characters (Young diagrams). Parts are weakly
// decreasing positive integers; the empty partition is the unique partition
// of 0.

#include <string>
#include <vector>

#include "covkit/rational.hpp"

namespace covkit {

using Partition = std::vector<long>;

// Weakly decreasing with all parts >= 1.
bool partition_valid(const Partition& p);
long partition_sum(const Partition& p);

// All partitions of n, descending lexicographic: (n) first, (1,...,1) last.
std::vector<Partition> partitions_of(long n);

std::string partition_str(const Partition& p);  // "[5,3,1]"; "[]" when empty

// Order of the S_n centralizer of a permutation with cycle type mu:
// prod_k k^{m_k} * m_k!.
BigInt centralizer_sn(const Partition& mu);

// Sign of any permutation with cycle type mu: (-1)^(n - #parts).
int cycle_type_sign(const Partition& mu);

// Element order: lcm of the parts (1 for the empty partition).
long lcm_of_parts(const Partition& mu);

Partition conjugate_partition(const Partition& p);
bool is_self_conjugate(const Partition& p);

// Hook lengths of the diagonal cells (i,i), strictly decreasing; these are
// all odd and distinct exactly when p is self-conjugate.
Partition diagonal_hooks(const Partition& p);

// Number of standard Young tableaux of shape p (hook length formula); the
// degree of the corresponding symmetric-group character.
BigInt hook_degree(const Partition& p);

// Every part odd and all parts distinct: the cycle types whose S_n class
// splits into two A_n classes.
bool all_parts_odd_distinct(const Partition& mu);

}  // namespace covkit
