#pragma once

// Small finite fields F_{p^f} with full add/mul tables. Elements are indices
// in [0, p^f): the base-p digits of an index are the coefficients (low degree
// first) of the residue polynomial modulo a fixed monic irreducible modulus.
// Intended for table-driven matrix group work at desk scale (q up to a few
// hundred); construction cost is O(q^2).

#include <cstdint>
#include <vector>

#include "covkit/rational.hpp"

namespace covkit {

class Fq {
 public:
  // The modulus is the lexicographically least monic irreducible polynomial
  // of degree f over F_p, comparing coefficient lists low-degree first.
  Fq(long p, long f);

  long p() const { return p_; }
  long f() const { return f_; }
  long q() const { return q_; }
  // Monic modulus, length f+1, coefficients in [0, p), high coefficient 1.
  const std::vector<long>& modulus() const { return modulus_; }

  long add(long a, long b) const { return add_[a * q_ + b]; }
  long sub(long a, long b) const { return add_[a * q_ + neg_[b]]; }
  long mul(long a, long b) const { return mul_[a * q_ + b]; }
  long neg(long a) const { return neg_[a]; }
  long inv(long a) const;  // MathError on 0
  long div(long a, long b) const { return mul(a, inv(b)); }
  long pow(long a, long e) const;

  long zero() const { return 0; }
  long one() const { return 1; }
  // The image of an integer under Z -> F_p -> F_q.
  long from_int(long v) const { return ((v % p_) + p_) % p_; }

  long frobenius(long a) const { return pow(a, p_); }
  long pow_frobenius(long a, long k) const;  // a^(p^k)
  // Absolute trace to the prime field, returned as an integer in [0, p).
  long trace(long a) const { return trace_[a]; }
  // Multiplicative order of a nonzero element.
  long element_order(long a) const;

  // A fixed generator of the multiplicative group (least such index).
  long primitive_element() const { return gen_; }

 private:
  long p_, f_, q_;
  std::vector<long> modulus_;
  std::vector<long> add_, mul_, neg_, inv_, trace_;
  long gen_;
};

// Shared registry (construct once per (p, f)); thread-safe.
const Fq& fq_make(long p, long f);

}  // namespace covkit
