#pragma once

// Permutations on {0..n-1} with composition acting on the left:
// (a*b)(x) = a(b(x)). Includes cycle-type utilities and the conjugacy test
// for even permutations inside the alternating group, where classes whose
// cycle lengths are odd and pairwise distinct split into two halves that are
// separated by the parity of any conjugating permutation.

#include <optional>
#include <string>
#include <vector>

namespace covkit {

struct Perm {
  std::vector<int> img;  // img[x] = image of x

  int degree() const { return (int)img.size(); }
  int operator()(int x) const { return img[x]; }
  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator!=(const Perm& o) const { return img != o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }
};

Perm perm_identity(int n);
Perm perm_mult(const Perm& a, const Perm& b);  // x -> a(b(x))
Perm perm_inverse(const Perm& a);
bool perm_is_identity(const Perm& a);

// Cycle lengths including fixed points, sorted descending (a partition of n).
std::vector<int> cycle_type(const Perm& a);

bool perm_is_even(const Perm& a);
long perm_order(const Perm& a);

// Build from 0-based cycles; entries must be distinct and within degree.
Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles);

// "(1 2 3)(5 6)" with 1-based points, fixed points omitted, "()" for the
// identity. parse accepts the same shape.
std::string perm_cycles_str(const Perm& a);
Perm perm_parse_cycles(int n, const std::string& text);

// Some w with w a w^{-1} = b, if the cycle types match.
std::optional<Perm> conjugating_perm(const Perm& a, const Perm& b);

// True when every cycle length is odd and no length repeats: exactly the
// types whose symmetric-group class breaks into two alternating-group
// classes.
bool class_splits_in_alt(const std::vector<int>& ctype);

// Conjugacy of two even permutations inside the alternating group of their
// common degree.
bool same_alt_class(const Perm& a, const Perm& b);

}  // namespace covkit
