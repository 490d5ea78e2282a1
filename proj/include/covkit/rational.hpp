#pragma once

// Exact arithmetic substrate. Arbitrary-precision integers and rationals are
// GMP's mpz/mpq classes. GMP keeps rationals canonical (gcd(num,den)=1,
// den>0) through arithmetic operators but NOT through the two-argument
// constructor; always build quotients through ratio() below. Everything
// downstream (cyclotomic numbers, character tables, Frobenius counts) builds
// on these two types.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace covkit {

using BigInt = mpz_class;
using Rat = mpq_class;

inline BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt ipow(long base, unsigned long e) { return ipow(BigInt(base), e); }

// Canonical quotient construction (reduced, positive denominator).
inline Rat ratio(const BigInt& num, const BigInt& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat ratio(long num, long den) { return ratio(BigInt(num), BigInt(den)); }

// Floor square root; m must be nonnegative.
inline BigInt isqrt(const BigInt& m) {
  if (m < 0) throw std::invalid_argument("isqrt: negative argument");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const BigInt& m, BigInt* root = nullptr) {
  if (m < 0) return false;
  BigInt r = isqrt(m);
  if (r * r == m) {
    if (root) *root = r;
    return true;
  }
  return false;
}

// True iff r = (a/b)^2 for some rational a/b; canonical rationals have square
// numerator and denominator exactly in that case.
inline bool is_perfect_square(const Rat& r, Rat* root = nullptr) {
  if (r < 0) return false;
  BigInt num = r.get_num(), den = r.get_den(), rn, rd;
  if (!is_perfect_square(num, &rn) || !is_perfect_square(den, &rd)) return false;
  if (root) *root = ratio(rn, rd);
  return true;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// Exit codes shared by the command-line tool: a MathError means a verified
// mathematical claim failed (exit 1), a UsageError means the request itself
// was malformed or out of budget (exit 2).
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace covkit
