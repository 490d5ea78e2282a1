#pragma once

// Exact cyclotomic numbers: elements of Q(zeta_n) in the power basis
// 1, zeta, ..., zeta^{phi(n)-1} modulo the n-th cyclotomic polynomial.
//
// Two layers:
//   * CycloField — a fixed conductor workspace with raw coefficient-vector
//     arithmetic (no canonicalization). Hot loops lift all operands into one
//     ambient field, work there, and canonicalize once at the end.
//   * CycloNum — the public value type. Always canonical: stored at the
//     minimal conductor (never 2 mod 4), so equality, zero tests and hashing
//     are structural.
//
// zeta_n denotes e^{2*pi*i/n} whenever a floating approximation is taken.

#include <complex>
#include <string>
#include <vector>

#include "covkit/fq.hpp"
#include "covkit/rational.hpp"

namespace covkit {

class CycloField {
 public:
  explicit CycloField(long n);

  long n() const { return n_; }
  long phi() const { return phi_; }

  // Coordinates of zeta^e in the power basis, e in [0, n).
  const std::vector<long long>& pow_row(long e) const { return pow_[e]; }

  using Vec = std::vector<Rat>;  // always length phi()

  Vec zero() const { return Vec(phi_, Rat(0)); }
  Vec from_rat(const Rat& r) const;
  Vec zeta_pow(long e) const;  // any integer e, reduced mod n

  void add_into(Vec& acc, const Vec& x) const;
  void sub_into(Vec& acc, const Vec& x) const;
  void add_scaled(Vec& acc, const Rat& c, const Vec& x) const;
  void scale(Vec& v, const Rat& c) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec galois(const Vec& a, long k) const;  // zeta -> zeta^k, gcd(k, n) = 1
  Vec conj(const Vec& a) const { return galois(a, n_ == 1 ? 1 : n_ - 1); }
  bool is_zero(const Vec& a) const;

  // Re-coordinatize from a subfield; sub.n() must divide n.
  Vec lift_from(const CycloField& sub, const Vec& a) const;

 private:
  long n_, phi_;
  std::vector<std::vector<long long>> pow_;
};

// Shared registry; thread-safe; fields are immutable once built.
const CycloField& cyclo_field(long n);

class CycloNum {
 public:
  CycloNum() : cond_(1), c_{Rat(0)} {}
  CycloNum(long v) : cond_(1), c_{Rat(v)} {}
  explicit CycloNum(const Rat& r) : cond_(1), c_{r} {}
  explicit CycloNum(const BigInt& v) : cond_(1), c_{Rat(v)} {}

  static CycloNum zeta(long n, long e = 1);
  // Canonicalize raw field coordinates into a CycloNum.
  static CycloNum from_raw(const CycloField& F, const CycloField::Vec& v);

  long conductor() const { return cond_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const { return cond_ == 1 && c_[0] == 0; }
  bool is_rational() const { return cond_ == 1; }
  Rat rational_value() const;  // MathError when not rational
  bool is_real() const;
  bool is_integer() const;

  CycloNum conj() const;
  CycloNum galois(long k) const;  // zeta_n -> zeta_n^k, requires gcd(k, n) = 1
  CycloNum pow(long k) const;     // k >= 0

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
  CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
  CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }
  friend CycloNum operator*(const CycloNum& a, const Rat& r);
  friend CycloNum operator/(const CycloNum& a, const Rat& r);

  bool operator==(const CycloNum& o) const { return cond_ == o.cond_ && c_ == o.c_; }
  bool operator!=(const CycloNum& o) const { return !(*this == o); }

  // Canonical textual form; doubles as a sort/hash key.
  std::string str() const;
  std::complex<double> approx() const;

 private:
  long cond_;
  std::vector<Rat> c_;  // length phi(cond_), power-basis coordinates
};

// Grammar: expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
// factor := integer | 'E(' integer ')' ['^' integer] | '(' expr ')' | '-' factor.
// Errors carry the offending position. E(n) requires n >= 1.
CycloNum cyclo_parse(const std::string& text);
std::string cyclo_print(const CycloNum& z);

// z * conj(z); exact and totally real.
CycloNum cyclo_abs2(const CycloNum& z);

// Exact square root of an integer: principal value (positive real for m > 0,
// i * sqrt(|m|) for m < 0), expressed with quadratic Gauss sums.
CycloNum sqrt_of_integer(const BigInt& m);

// Quadratic Gauss sum over F_q: sum over x in F_q of zeta_p^{Tr(x^2)}.
// Its square is q for q = 1 mod 4 and -q for q = 3 mod 4.
CycloNum gauss_sum_fq(const Fq& F);

}  // namespace covkit
