#pragma once

// Constructive factorizations of permutations into factors of prescribed
// small order (two involutions; an involution times a cube root of unity;
// two cube roots of unity), a greedy builder for p-power permutations with
// prescribed images, and exhaustive verifiers for two covering statements
// about alternating groups at small degree.
//
// Composition convention throughout: (a*b)(x) = a(b(x)), so in a returned
// factorization (f, g) the product applies g first.

#include <string>
#include <utility>
#include <vector>

#include "covkit/partition.hpp"
#include "covkit/rational.hpp"

namespace covkit {

// A permutation of {1..n}; images[i-1] = sigma(i). Always a bijection.
struct Permutation {
  long n = 0;
  std::vector<long> images;

  static Permutation identity(long n);
  // Validates that images is a bijection on {1..n}; throws UsageError.
  static Permutation from_images(long n, std::vector<long> images);

  long degree() const { return n; }
  long apply(long x) const;  // 1-indexed; throws UsageError out of range
  bool is_identity() const;

  bool operator==(const Permutation& o) const { return n == o.n && images == o.images; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
};

// (a*b)(x) = a(b(x)). Degrees must match.
Permutation perm_mult(const Permutation& a, const Permutation& b);
Permutation perm_inverse(const Permutation& a);
int perm_sign(const Permutation& a);  // +1 even, -1 odd
long perm_fixed_count(const Permutation& a);
bool perm_order_divides(const Permutation& a, long m);  // m >= 1

// Nontrivial cycles as traversals (c[0] -> c[1] -> ... -> c[0]), each
// starting at its least point, ordered by least point.
std::vector<std::vector<long>> perm_cycles(const Permutation& a);
Partition perm_cycle_type(const Permutation& a);  // includes fixed points

// Cycle notation: "(1,2,3)(4,5)"; the identity prints as "()".
std::string perm_str(const Permutation& a);
// Parses the same notation (whitespace tolerated). Points must lie in
// [1, n] and appear at most once overall; throws UsageError with the
// offending position.
Permutation perm_parse(const std::string& text, long n);

// Fixed-point thresholds for the three relevant factor orders.
struct TypeThresholds {
  static constexpr long B2 = 75;
  static constexpr long B3 = 100;
  static constexpr long B5 = 60;
};
long type_threshold(long p);  // B_p; p must be 2, 3 or 5

// sigma = tau1 * tau2 with tau1^2 = tau2^2 = 1. Each cycle of sigma is
// factored on its own support, so supports of distinct cycles stay
// disjoint.
std::pair<Permutation, Permutation> two_involutions(const Permutation& sigma);

// sigma = tau * rho with tau^2 = 1 and rho^3 = 1.
std::pair<Permutation, Permutation> involution_order3(const Permutation& sigma);

// sigma = rho1 * rho2 with rho1^3 = rho2^3 = 1 (both factors are then
// automatically even). Odd cycles are factored individually; even-length
// cycles are paired longest-with-longest and each pair is factored on the
// union of its supports. When must_be_even is set, an odd input is a
// UsageError; otherwise an odd input raises MathError since no such
// factorization exists.
std::pair<Permutation, Permutation> two_order3(const Permutation& sigma,
                                               bool must_be_even = true);

// A permutation sigma of {1..n} with sigma^p = 1 and sigma(u_i) = v_i for
// every pair. Requires p prime, n >= p * pairs.size(), the u_i pairwise
// distinct, the v_i pairwise distinct, and u_i != v_j for i != j. The
// support is a disjoint union of p-sets, one per pair with u_i != v_i,
// each completed greedily with the least points free of every pair.
Permutation lemma_construct(long p, long n,
                            const std::vector<std::pair<long, long>>& pairs);

// An even pi with pi^p = 1 (p in {2,3,5}), at least B_p fixed points, and
// pi * rho having at least want_fixed fixed points. Requires
// n >= (p+1)*want_fixed + B_p (+2 when p = 2, to leave room for a parity
// correction); throws UsageError naming the required minimum otherwise.
// All four output properties are re-verified before returning.
Permutation fixed_point_steering(const Permutation& rho, long p, long want_fixed);

// Whether every element of Alt(n) is a product of two p-cycles, decided by
// exhaustive search over the p-cycles against one representative per
// Alt(n)-class (both representatives when a cycle type splits). Requires
// floor(3n/4) <= p <= n with p prime; n <= 12 is the enumeration budget.
bool verify_bertrand(long n, long p);

// Whether every element of Alt(n) is a product of two permutations each
// consisting of two disjoint cycles of lengths r and s, by the same
// exhaustive scheme. Requires r, s >= 2 and n-1 <= r+s <= n; n <= 11.
bool verify_xu(long n, long r, long s);

}  // namespace covkit
