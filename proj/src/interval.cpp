#include "covkit/interval.hpp"

#include <algorithm>

namespace covkit {

RatInterval operator+(const RatInterval& a, const RatInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatInterval operator-(const RatInterval& a, const RatInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RatInterval operator*(const RatInterval& a, const RatInterval& b) {
  Rat c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
  return {std::min(std::min(c1, c2), std::min(c3, c4)),
          std::max(std::max(c1, c2), std::max(c3, c4))};
}

RatInterval ri_pi() {
  static const Rat lo = ratio(BigInt("314159265358979323846"), BigInt("100000000000000000000"));
  static const Rat hi = ratio(BigInt("314159265358979323847"), BigInt("100000000000000000000"));
  return {lo, hi};
}

RatInterval ri_round_out(const RatInterval& x, int bits) {
  BigInt scale = BigInt(1) << bits;
  BigInt lo_n, hi_n;
  // Floor for the lower bound, ceiling for the upper.
  mpz_fdiv_q(lo_n.get_mpz_t(), BigInt(x.lo.get_num() * scale).get_mpz_t(),
             x.lo.get_den().get_mpz_t());
  mpz_cdiv_q(hi_n.get_mpz_t(), BigInt(x.hi.get_num() * scale).get_mpz_t(),
             x.hi.get_den().get_mpz_t());
  return {ratio(lo_n, scale), ratio(hi_n, scale)};
}

RatInterval ri_cos(const RatInterval& x) {
  if (x.hi > 7 || x.lo < -7) throw UsageError("ri_cos: argument exceeds the series range");
  // Taylor series at the midpoint; the tail of the alternating series bounds
  // the truncation error, and |cos'| <= 1 absorbs the interval width.
  Rat m = (x.lo + x.hi) / 2;
  Rat m2 = m * m;
  Rat sum(1), term(1);
  const int K = 30;
  for (int k = 1; k <= K; ++k) {
    term = term * m2 / Rat((2 * k - 1) * 2 * k);
    if (k % 2 == 1)
      sum -= term;
    else
      sum += term;
  }
  Rat tail = term * m2 / Rat((2 * K + 1) * (2 * K + 2));
  if (tail < 0) tail = -tail;
  Rat slack = x.hi - x.lo;  // Lipschitz bound over the argument interval
  RatInterval out(sum - tail - slack, sum + tail + slack);
  // Clamp into [-1, 1]; cos never escapes it and the clamp keeps bounds sane.
  if (out.lo < -1) out.lo = -1;
  if (out.hi > 1) out.hi = 1;
  return ri_round_out(out, 128);
}

RatInterval ri_sqrt(const RatInterval& x) {
  if (x.lo < 0) throw UsageError("ri_sqrt: negative argument");
  const int bits = 96;
  auto upper = [&](const Rat& v) {
    // sqrt(p/q) = sqrt(p*q)/q; isqrt gives floor, +1 gives a ceiling.
    BigInt p = v.get_num(), q = v.get_den();
    BigInt scaled = p * q << (2 * bits);
    BigInt root = isqrt(scaled) + 1;
    return ratio(root, q << bits);
  };
  auto lower = [&](const Rat& v) {
    BigInt p = v.get_num(), q = v.get_den();
    BigInt scaled = p * q << (2 * bits);
    BigInt root = isqrt(scaled);
    return ratio(root, q << bits);
  };
  return {lower(x.lo), upper(x.hi)};
}

RatInterval enclose_real_cyclo(const CycloNum& z) {
  if (!z.is_real()) throw UsageError("enclose_real_cyclo: value is not real");
  if (z.is_rational()) return RatInterval(z.rational_value());
  long n = z.conductor();
  RatInterval two_pi = ri_pi() + ri_pi();
  RatInterval acc{Rat(0)};
  const auto& c = z.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    RatInterval ang{two_pi.lo * Rat((long)j) / Rat(n), two_pi.hi * Rat((long)j) / Rat(n)};
    acc = acc + RatInterval(c[j]) * ri_cos(ang);
  }
  return ri_round_out(acc, 128);
}

}  // namespace covkit
