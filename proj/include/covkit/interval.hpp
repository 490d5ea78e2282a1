#pragma once

// Rational interval arithmetic: certified enclosures for the few
// transcendental evaluations the toolkit needs (cosine at rational multiples
// of pi, square roots). Bounds are exact rationals; every operation is
// outward-rounded, so any derived comparison is a proof.

#include "covkit/cyclo.hpp"
#include "covkit/rational.hpp"

namespace covkit {

struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(const Rat& point) : lo(point), hi(point) {}
  RatInterval(const Rat& l, const Rat& h) : lo(l), hi(h) {
    if (lo > hi) throw MathError("interval: inverted bounds");
  }

  Rat width() const { return hi - lo; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
};

RatInterval operator+(const RatInterval& a, const RatInterval& b);
RatInterval operator-(const RatInterval& a, const RatInterval& b);
RatInterval operator*(const RatInterval& a, const RatInterval& b);

// Tight two-sided rational bounds on pi (20 decimal digits).
RatInterval ri_pi();

// Enclosure of cos over the interval argument; requires |x| <= 7.
RatInterval ri_cos(const RatInterval& x);

// Enclosure of sqrt; requires x.lo >= 0. Uses integer square roots at a
// fixed binary precision, so bounds stay small.
RatInterval ri_sqrt(const RatInterval& x);

// Widen to bounds representable with denominators ~2^bits; keeps chained
// computations from accumulating huge exact rationals.
RatInterval ri_round_out(const RatInterval& x, int bits);

// Certified enclosure of a real cyclotomic value (z must equal its
// conjugate); evaluates sum c_j * cos(2*pi*j/n) with outward rounding.
RatInterval enclose_real_cyclo(const CycloNum& z);

}  // namespace covkit
