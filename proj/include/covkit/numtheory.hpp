#pragma once

// Integer and prime utilities: factorization (trial division + Pollard rho,
// inputs up to 2^64), cyclotomic polynomial evaluation, Zsigmondy primes,
// prime-interval coverage by chaining, and prime density sums. All functions
// are pure and safe to call concurrently.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covkit/rational.hpp"

namespace covkit {

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

// Prime factorization with primes strictly increasing. The input must fit in
// 64 bits (budget: trial division + Pollard rho); larger inputs raise
// UsageError.
std::vector<std::pair<BigInt, int>> factorize(const BigInt& m);

long mobius(long n);
long euler_phi(long n);
std::vector<long> divisors(long n);

// Phi_n(q) evaluated exactly via the Moebius product over divisors of n.
BigInt cyclotomic_poly_at(long n, const BigInt& q);

struct ZsigmondyResult {
  bool exists = false;
  BigInt ell = 0;  // smallest witness when exists
};

// Smallest prime ell with ord_ell(q) = n (so ell | Phi_n(q), ell ∤ q,
// ell ≡ 1 mod n). Requires q ≥ 2, n ≥ 3; the single missing case at desk
// scale is (q,n) = (2,6). The witness is the least prime factor of the
// primitive part of Phi_n(q); when that part is large and composite the
// factorization falls back to Pollard rho over arbitrary-precision integers
// (leaf primality beyond 64 bits uses GMP's probable-prime test, which has
// no known failures), and a fixed iteration budget turns pathological inputs
// into MathError rather than an endless search.
ZsigmondyResult zsigmondy(const BigInt& q, long n);

struct CoverageResult {
  bool covered = false;
  std::int64_t first_uncovered = 0;  // meaningful when !covered
};

// True iff every integer n in [lo, hi] admits a listed prime p with
// floor(3n/4) <= p <= n-1. Computed by interval chaining: prime p covers
// exactly n in [p+1, floor((4p+3)/3)]. Entries must be ascending primes
// ≡ 1 (mod 4); anything else raises UsageError.
CoverageResult prime_table_covers(const std::vector<std::int64_t>& primes,
                                  std::int64_t lo, std::int64_t hi);

// One prime per line, ascending.
std::vector<std::int64_t> load_prime_table(const std::string& path);

struct DensitySum {
  double sum = 0.0;    // sum of log p, ascending accumulation
  double ratio = 0.0;  // sum / n
  long count = 0;      // number of primes p < n, p ≡ 1 (mod 4)
};

// Sum of log p over primes p < n with p ≡ 1 (mod 4). Trend reporting only:
// deterministic double accumulation in ascending order.
DensitySum density_sum_mod4(long n);

struct GapScan {
  // Largest m for which [m, 11m/10] contains no prime ≡ 1 (mod 4), scanning
  // m ≤ 10n/11; 0 if none.
  std::int64_t last_violating_m = 0;
  long violations = 0;
};

GapScan density_gap_scan_mod4(long n);

// Simple sieve; returns primes < n in ascending order.
std::vector<long> primes_below(long n);

}  // namespace covkit
