#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <random>

#include "covkit/numtheory.hpp"

using namespace covkit;

TEST_CASE("primality: deterministic Miller-Rabin over the 64-bit range") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(3));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(0));
  CHECK(is_prime_u64((1ull << 61) - 1));          // Mersenne
  CHECK_FALSE(is_prime_u64((1ull << 62) - 1));
  CHECK(is_prime_u64(18446744073709551557ull));   // largest prime below 2^64
  CHECK_FALSE(is_prime_u64(18446744073709551615ull));
  // Strong pseudoprimes to small bases must still be rejected.
  CHECK_FALSE(is_prime_u64(3215031751ull));
  CHECK_FALSE(is_prime_u64(3825123056546413051ull));
}

TEST_CASE("factorize: exponent form, ascending primes") {
  CHECK(factorize(1).empty());

  auto f60 = factorize(60);
  REQUIRE(f60.size() == 3);
  CHECK(f60[0] == std::make_pair(BigInt(2), 2));
  CHECK(f60[1] == std::make_pair(BigInt(3), 1));
  CHECK(f60[2] == std::make_pair(BigInt(5), 1));

  auto f17 = factorize(17);
  REQUIRE(f17.size() == 1);
  CHECK(f17[0] == std::make_pair(BigInt(17), 1));

  auto f2e61 = factorize(BigInt(1) << 61);
  REQUIRE(f2e61.size() == 1);
  CHECK(f2e61[0] == std::make_pair(BigInt(2), 61));

  // Semiprime beyond trial-division reach exercises the rho splitter.
  BigInt p(1000000007), q(1000000009);
  auto fs = factorize(p * q);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] == std::make_pair(p, 1));
  CHECK(fs[1] == std::make_pair(q, 1));

  CHECK_THROWS_AS(factorize(0), UsageError);
  CHECK_THROWS_AS(factorize(BigInt(1) << 70), UsageError);
}

TEST_CASE("factorize: product round-trip on random inputs") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    std::uint64_t m = (rng() % 0xFFFFFFFFull) + 1;
    BigInt prod = 1;
    BigInt last = 0;
    for (auto& [pp, e] : factorize(BigInt((unsigned long)m))) {
      CHECK(pp > last);
      last = pp;
      CHECK(is_prime_u64(mpz_get_ui(pp.get_mpz_t())));
      for (int i = 0; i < e; ++i) prod *= pp;
    }
    CHECK(prod == BigInt((unsigned long)m));
  }
}

TEST_CASE("mobius, euler_phi, divisors") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(97) == 96);
  CHECK(divisors(28) == std::vector<long>{1, 2, 4, 7, 14, 28});
  CHECK(divisors(1) == std::vector<long>{1});

  // Sum of phi over divisors of n equals n.
  for (long n = 1; n <= 200; ++n) {
    long s = 0;
    for (long d : divisors(n)) s += euler_phi(d);
    CHECK(s == n);
  }
}

TEST_CASE("cyclotomic evaluation: pinned values") {
  for (int q = 2; q <= 16; ++q) CHECK(cyclotomic_poly_at(1, q) == q - 1);
  CHECK(cyclotomic_poly_at(12, 2) == 13);
  CHECK(cyclotomic_poly_at(8, 3) == 82);
  CHECK(cyclotomic_poly_at(2, 7) == 8);
  CHECK(cyclotomic_poly_at(6, 2) == 3);
  // At q = 1 the value is p on prime powers and 1 otherwise.
  CHECK(cyclotomic_poly_at(9, 1) == 3);
  CHECK(cyclotomic_poly_at(4, 1) == 2);
  CHECK(cyclotomic_poly_at(6, 1) == 1);
  CHECK(cyclotomic_poly_at(1, 1) == 0);
  CHECK_THROWS_AS(cyclotomic_poly_at(0, 5), UsageError);
}

TEST_CASE("cyclotomic evaluation: divisor product recovers q^m - 1") {
  for (long m = 1; m <= 30; ++m) {
    for (BigInt q = 2; q <= 16; ++q) {
      BigInt prod = 1;
      for (long d : divisors(m)) prod *= cyclotomic_poly_at(d, q);
      CHECK(prod == ipow(q, (unsigned long)m) - 1);
    }
  }
}

TEST_CASE("zsigmondy: pinned witnesses and the lone failure") {
  CHECK_FALSE(zsigmondy(2, 6).exists);
  auto z24 = zsigmondy(2, 4);
  CHECK(z24.exists);
  CHECK(z24.ell == 5);
  auto z38 = zsigmondy(3, 8);
  CHECK(z38.exists);
  CHECK(z38.ell == 41);
  CHECK(zsigmondy(2, 10).ell == 11);
  CHECK(zsigmondy(2, 12).ell == 13);
  CHECK_THROWS_AS(zsigmondy(1, 5), UsageError);
  CHECK_THROWS_AS(zsigmondy(2, 2), UsageError);
}

TEST_CASE("zsigmondy: witness properties across a sweep") {
  for (int q = 2; q <= 32; ++q) {
    for (long n = 3; n <= 30; ++n) {
      auto z = zsigmondy(q, n);
      if (q == 2 && n == 6) {
        CHECK_FALSE(z.exists);
        continue;
      }
      REQUIRE(z.exists);
      const BigInt& ell = z.ell;
      if (mpz_sizeinbase(ell.get_mpz_t(), 2) <= 63)
        CHECK(is_prime_u64(mpz_get_ui(ell.get_mpz_t())));
      else
        CHECK(mpz_probab_prime_p(ell.get_mpz_t(), 40) != 0);
      CHECK(ell % n == 1);
      CHECK(BigInt(q) % ell != 0);
      CHECK(cyclotomic_poly_at(n, q) % ell == 0);
      // Order check, recomputed directly: q^n = 1 mod ell but q^(n/p) != 1
      // for every prime p | n.
      BigInt qn, base = q;
      mpz_powm_ui(qn.get_mpz_t(), base.get_mpz_t(), (unsigned long)n, ell.get_mpz_t());
      CHECK(qn == 1);
      for (auto& [p, e] : factorize(n)) {
        BigInt qm;
        unsigned long sub = (unsigned long)(n / p.get_si());
        mpz_powm_ui(qm.get_mpz_t(), base.get_mpz_t(), sub, ell.get_mpz_t());
        CHECK(qm != 1);
      }
    }
  }
}

TEST_CASE("zsigmondy: least witnesses that need deep factorization") {
  // Values where the least witness dwarfs any walkable range; each pinned
  // number was produced by an independent factorization of the primitive part.
  CHECK(zsigmondy(14, 25).ell == 110256001);
  CHECK(zsigmondy(29, 28).ell == 427822081);
  CHECK(zsigmondy(20, 19).ell == BigInt("75368484119"));
  CHECK(zsigmondy(31, 27).ell == BigInt("1836205027201"));
  CHECK(zsigmondy(18, 29).ell == BigInt("1505548068007783"));
  CHECK(zsigmondy(11, 17).ell == BigInt("50544702849929377"));
  CHECK(zsigmondy(6, 29).ell == BigInt("7369130657357778596659"));
  // Primitive part prime and far past 64 bits: the result is the part itself.
  CHECK(zsigmondy(22, 25).ell == BigInt("705429635566498619547944801"));
}

TEST_CASE("prime table coverage: shipped table chains from 30 to 1326258130") {
  auto table = load_prime_table(std::string(COVKIT_SOURCE_DIR) + "/data/primes_1mod4.txt");
  REQUIRE(table.size() == 64);
  CHECK(table.front() == 29);
  CHECK(table.back() == 994693597);

  auto full = prime_table_covers(table, 30, 1326258130);
  CHECK(full.covered);
  // The reach is maximal: one step further and the chain has run out.
  auto past = prime_table_covers(table, 30, 1326258131);
  CHECK_FALSE(past.covered);
  CHECK(past.first_uncovered == 1326258131);
  auto fiction = prime_table_covers(table, 30, 13000000000LL);
  CHECK_FALSE(fiction.covered);
  CHECK(fiction.first_uncovered == 1326258131);

  // Every entry is essential: dropping any one opens a gap.
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto reduced = table;
    reduced.erase(reduced.begin() + (std::ptrdiff_t)i);
    CHECK_FALSE(prime_table_covers(reduced, 30, 1326258130).covered);
  }
}

TEST_CASE("prime table coverage: extended table reaches 1.3e10") {
  auto table = load_prime_table(std::string(COVKIT_SOURCE_DIR) + "/data/primes_1mod4_extended.txt");
  REQUIRE(table.size() == 72);
  auto res = prime_table_covers(table, 30, 13000000000LL);
  CHECK(res.covered);
}

TEST_CASE("prime table coverage: small cases and gap detection") {
  auto table = load_prime_table(std::string(COVKIT_SOURCE_DIR) + "/data/primes_1mod4.txt");
  // Dropping the first prime uncovers the very first value.
  auto no29 = table;
  no29.erase(no29.begin());
  auto res = prime_table_covers(no29, 30, 40);
  CHECK_FALSE(res.covered);
  CHECK(res.first_uncovered == 30);

  CHECK(prime_table_covers({13}, 14, 17).covered);
  CHECK(prime_table_covers({13}, 14, 18).covered);
  auto r19 = prime_table_covers({13}, 14, 19);
  CHECK_FALSE(r19.covered);
  CHECK(r19.first_uncovered == 19);

  CHECK(prime_table_covers({5}, 7, 7).covered);
  CHECK(prime_table_covers({}, 5, 4).covered);  // empty range is vacuous
  CHECK_FALSE(prime_table_covers({}, 5, 5).covered);
}

TEST_CASE("prime table coverage: monotone in the table and the range") {
  auto table = load_prime_table(std::string(COVKIT_SOURCE_DIR) + "/data/primes_1mod4.txt");
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    std::int64_t lo = 30 + (std::int64_t)(rng() % 1000000);
    std::int64_t hi = lo + (std::int64_t)(rng() % 100000000);
    if (hi > 1326258130) hi = 1326258130;
    CHECK(prime_table_covers(table, lo, hi).covered);
  }
  // Appending a valid prime can only extend coverage, never lose it.
  auto extended = table;
  extended.push_back(1326258097);
  CHECK(prime_table_covers(extended, 30, 1326258130).covered);
  CHECK(prime_table_covers(extended, 30, 1768344128).covered);
}

TEST_CASE("prime table coverage: input validation") {
  CHECK_THROWS_AS(prime_table_covers({15}, 16, 17), UsageError);       // composite
  CHECK_THROWS_AS(prime_table_covers({7}, 8, 9), UsageError);          // 3 mod 4
  CHECK_THROWS_AS(prime_table_covers({13, 13}, 14, 15), UsageError);   // not ascending
  CHECK_THROWS_AS(prime_table_covers({17, 13}, 14, 15), UsageError);   // not ascending
  CHECK_THROWS_AS(load_prime_table("/nonexistent/file.txt"), UsageError);
}

TEST_CASE("density: log-sum of primes 1 mod 4") {
  auto d10 = density_sum_mod4(10);
  CHECK(d10.count == 1);
  CHECK(d10.sum == doctest::Approx(std::log(5.0)).epsilon(1e-12));

  auto d100 = density_sum_mod4(100);
  CHECK(d100.count == 11);  // 5 13 17 29 37 41 53 61 73 89 97

  // The ratio drifts toward 1/2 (half of all primes, each weighted log p ~ n).
  auto d6 = density_sum_mod4(1000000);
  CHECK(d6.ratio > 0.45);
  CHECK(d6.ratio < 0.55);
}

TEST_CASE("density gap scan: last interval [m, 1.1m] without a 1 mod 4 prime") {
  // Cross-check the scan against a direct double loop at small scale.
  {
    auto ps = primes_below(2000);
    auto g = density_gap_scan_mod4(2000);
    long brute_last = 0, brute_count = 0;
    for (long m = 2; m <= (10L * 2000) / 11; ++m) {
      bool ok = false;
      for (long p : ps)
        if (p % 4 == 1 && p >= m && 10 * p <= 11 * m) ok = true;
      if (!ok) {
        brute_count++;
        brute_last = m;
      }
    }
    CHECK(g.last_violating_m == brute_last);
    CHECK(g.violations == brute_count);
  }
  // At full scale the last violating m sits at 462: the primes between 462
  // and 508 are all 3 mod 4, and 509 overshoots 1.1 * 462.
  auto g7 = density_gap_scan_mod4(10000000);
  CHECK(g7.last_violating_m == 462);
  CHECK(g7.violations == 68);
}

TEST_CASE("primes_below") {
  CHECK(primes_below(2).empty());
  CHECK(primes_below(30) ==
        std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}
