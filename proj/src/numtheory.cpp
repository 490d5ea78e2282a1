#include "covkit/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

namespace covkit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // This base set is a proven deterministic witness set for all n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

// Brent-style Pollard rho with a deterministic sequence of polynomial offsets,
// so factorizations are reproducible run to run.
u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      u64 diff = x > y ? x - y : y - x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  // Trial division first keeps small factors cheap and rho inputs odd.
  for (u64 p = 3; p * p <= n && p < 100000; p += 2) {
    if (n % p == 0) {
      out.push_back(p);
      factor_rec(n / p, out);
      return;
    }
  }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<BigInt, int>> factorize(const BigInt& m) {
  if (m < 1) throw UsageError("factorize: argument must be positive");
  if (!m.fits_ulong_p() && mpz_sizeinbase(m.get_mpz_t(), 2) > 64)
    throw UsageError("factorize: input exceeds the 64-bit factorization budget");
  u64 n = 0;
  {
    // mpz -> u64 without assuming unsigned long is 64-bit.
    BigInt t = m;
    for (int i = 0; i < 64 && t > 0; ++i) {
      if (mpz_tstbit(t.get_mpz_t(), i)) n |= (u64)1 << i;
    }
  }
  std::vector<u64> fs;
  while (n % 2 == 0 && n > 1) {
    fs.push_back(2);
    n /= 2;
  }
  factor_rec(n, fs);
  std::sort(fs.begin(), fs.end());
  std::vector<std::pair<BigInt, int>> out;
  for (u64 p : fs) {
    if (!out.empty() && out.back().first == BigInt(p))
      out.back().second++;
    else
      out.emplace_back(BigInt(p), 1);
  }
  return out;
}

long mobius(long n) {
  if (n < 1) throw UsageError("mobius: argument must be positive");
  long result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> divisors(long n) {
  std::vector<long> ds;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

BigInt cyclotomic_poly_at(long n, const BigInt& q) {
  if (n < 1) throw UsageError("cyclotomic_poly_at: n must be positive");
  if (q == 1) {
    // Phi_n(1) = p when n is a prime power p^k (n > 1), 0 for n = 1, else 1.
    if (n == 1) return 0;
    auto fs = factorize(n);
    if (fs.size() == 1) return fs[0].first;
    return 1;
  }
  // Phi_n(q) = prod_{d | n} (q^d - 1)^{mu(n/d)}; collect numerator and
  // denominator separately and divide once (the quotient is exact).
  BigInt num = 1, den = 1;
  for (long d : divisors(n)) {
    long mu = mobius(n / d);
    if (mu == 0) continue;
    BigInt term = ipow(q, (unsigned long)d) - 1;
    if (mu == 1)
      num *= term;
    else
      den *= term;
  }
  BigInt out, rem;
  mpz_tdiv_qr(out.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem != 0) throw MathError("cyclotomic_poly_at: non-exact Moebius quotient");
  return out;
}

namespace {

bool probably_prime(const BigInt& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) <= 63)
    return is_prime_u64(mpz_get_ui(v.get_mpz_t()));
  return mpz_probab_prime_p(v.get_mpz_t(), 40) != 0;
}

// One Brent-cycle rho round with polynomial x^2 + c; returns a divisor of N
// (possibly N itself on a collapsed cycle). budget counts modular squarings
// across all rounds and raises MathError when spent.
BigInt brent_round(const BigInt& N, unsigned long c, long long& budget) {
  BigInt y = 2, x, ys, acc = 1, g = 1, t;
  unsigned long r = 1;
  const unsigned long batch = 128;
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % N;
    budget -= (long long)r;
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      unsigned long lim = std::min(batch, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        y = (y * y + c) % N;
        t = x - y;
        acc = (acc * t) % N;
      }
      budget -= (long long)lim;
      mpz_gcd(g.get_mpz_t(), acc.get_mpz_t(), N.get_mpz_t());
      k += lim;
    }
    r *= 2;
    if (budget < 0) throw MathError("zsigmondy: factorization budget exceeded");
  }
  if (g == N) {
    // The batched gcd swallowed the split; replay from the saved point.
    g = 1;
    while (g == 1) {
      ys = (ys * ys + c) % N;
      t = x - ys;
      if (t == 0) return N;
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), N.get_mpz_t());
    }
  }
  return g;
}

BigInt least_prime_factor(const BigInt& N, long long& budget) {
  if (probably_prime(N)) return N;
  if (mpz_sizeinbase(N.get_mpz_t(), 2) <= 63) return factorize(N).front().first;
  for (unsigned long c = 1;; ++c) {
    if (budget < 0) throw MathError("zsigmondy: factorization budget exceeded");
    BigInt d = brent_round(N, c, budget);
    if (d != 1 && d != N)
      return std::min(least_prime_factor(d, budget),
                      least_prime_factor(N / d, budget));
  }
}

}  // namespace

ZsigmondyResult zsigmondy(const BigInt& q, long n) {
  if (q < 2) throw UsageError("zsigmondy: q must be at least 2");
  if (n < 3) throw UsageError("zsigmondy: n must be at least 3");
  // Primitive part of Phi_n(q): a prime can divide both Phi_n(q) and n only
  // non-primitively, so stripping every prime of n leaves exactly the product
  // of primes ell with ord_ell(q) = n. Each such ell is odd and ≡ 1 (mod n),
  // hence ≡ 1 (mod step) below, and so is every divisor of the stripped z.
  BigInt z = cyclotomic_poly_at(n, q);
  for (auto& [p, e] : factorize(n)) {
    unsigned long pl = mpz_get_ui(p.get_mpz_t());
    while (mpz_divisible_ui_p(z.get_mpz_t(), pl))
      mpz_divexact_ui(z.get_mpz_t(), z.get_mpz_t(), pl);
  }
  if (z == 1) return {false, 0};
  // Ascending walk over the only residues divisors can occupy. The first hit
  // is the least divisor > 1 of z, which is automatically prime; passing
  // sqrt(z) with no hit proves z itself prime.
  BigInt root = isqrt(z);
  unsigned long step = (n % 2 == 1) ? 2ul * (unsigned long)n : (unsigned long)n;
  const unsigned long walk_cap = 2000000;
  unsigned long ell = step + 1;
  for (; ell <= walk_cap && root >= ell; ell += step) {
    if (mpz_divisible_ui_p(z.get_mpz_t(), ell)) return {true, BigInt(ell)};
  }
  if (root < ell) return {true, z};
  // Least factor exceeds the walk range: factor z completely.
  long long budget = 400000000;
  return {true, least_prime_factor(z, budget)};
}

CoverageResult prime_table_covers(const std::vector<std::int64_t>& primes,
                                  std::int64_t lo, std::int64_t hi) {
  std::int64_t prev = 0;
  for (auto p : primes) {
    if (p <= prev) throw UsageError("prime_table_covers: entries must be strictly ascending");
    prev = p;
    if (p < 0 || !is_prime_u64((u64)p))
      throw UsageError("prime_table_covers: non-prime entry " + std::to_string(p));
    if (p % 4 != 1)
      throw UsageError("prime_table_covers: entry " + std::to_string(p) +
                       " is not congruent to 1 mod 4");
  }
  if (lo > hi) return {true, 0};
  // Prime p covers exactly the n with p+1 <= n <= floor((4p+3)/3): the lower
  // end is p <= n-1, the upper end unwinds floor(3n/4) <= p.
  std::int64_t c = lo;  // least value not yet known covered
  for (auto p : primes) {
    if (c > hi) break;
    std::int64_t n_min = p + 1;
    std::int64_t n_max = (4 * p + 3) / 3;
    if (n_max < c) continue;  // too small to help
    if (n_min > c) return {false, c};  // gap before this prime can start
    c = n_max + 1;
  }
  if (c > hi) return {true, 0};
  return {false, c};
}

std::vector<std::int64_t> load_prime_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open prime table file: " + path);
  std::vector<std::int64_t> out;
  std::int64_t v;
  while (in >> v) out.push_back(v);
  if (out.empty()) throw UsageError("prime table file is empty: " + path);
  return out;
}

std::vector<long> primes_below(long n) {
  std::vector<long> ps;
  if (n <= 2) return ps;
  std::vector<bool> comp(n, false);
  for (long i = 2; i < n; ++i) {
    if (!comp[i]) {
      ps.push_back(i);
      for (long j = 2 * i; j < n; j += i) comp[j] = true;
    }
  }
  return ps;
}

DensitySum density_sum_mod4(long n) {
  if (n < 2) throw UsageError("density_sum_mod4: n must be at least 2");
  DensitySum out;
  for (long p : primes_below(n)) {
    if (p % 4 == 1) {
      out.sum += std::log((double)p);
      out.count++;
    }
  }
  out.ratio = out.sum / (double)n;
  return out;
}

GapScan density_gap_scan_mod4(long n) {
  GapScan out;
  auto ps = primes_below(n);
  std::vector<long> q1;
  for (long p : ps)
    if (p % 4 == 1) q1.push_back(p);
  long m_hi = (long)(((long long)10 * n) / 11);
  // m violates iff no listed prime lies in [m, 11m/10]; walk m against the
  // sorted prime list with a moving index.
  std::size_t idx = 0;
  for (long m = 2; m <= m_hi; ++m) {
    while (idx < q1.size() && q1[idx] < m) ++idx;
    bool ok = idx < q1.size() && 10 * q1[idx] <= 11 * m;
    if (!ok) {
      out.violations++;
      out.last_violating_m = m;
    }
  }
  return out;
}

}  // namespace covkit
