#include "covkit/fq.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "covkit/numtheory.hpp"

namespace covkit {

namespace {

// Polynomials over F_p as coefficient vectors, low degree first, no trailing
// zeros (the zero polynomial is the empty vector).

std::vector<long> poly_trim(std::vector<long> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& m, long p) {
  // m monic of degree d; reduce a in place.
  long d = (long)m.size() - 1;
  for (long i = (long)a.size() - 1; i >= d; --i) {
    long c = a[i] % p;
    if (c == 0) continue;
    for (long j = 0; j <= d; ++j) {
      a[i - d + j] = ((a[i - d + j] - c * m[j]) % p + p) % p;
    }
  }
  a.resize(d);
  for (auto& v : a) v = ((v % p) + p) % p;
  return poly_trim(a);
}

std::vector<long> poly_mulmod(const std::vector<long>& a, const std::vector<long>& b,
                              const std::vector<long>& m, long p) {
  if (a.empty() || b.empty()) return {};
  std::vector<long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_mod(std::move(c), m, p);
}

// Irreducibility over F_p by trial division with all monic polynomials of
// degree up to deg/2 (desk scale: p^f stays small).
bool poly_irreducible(const std::vector<long>& m, long p) {
  long d = (long)m.size() - 1;
  if (d <= 1) return d == 1;
  for (long deg = 1; 2 * deg <= d; ++deg) {
    // All monic polynomials of this degree, counted in base p.
    long count = 1;
    for (long i = 0; i < deg; ++i) count *= p;
    for (long idx = 0; idx < count; ++idx) {
      std::vector<long> g(deg + 1, 0);
      long t = idx;
      for (long i = 0; i < deg; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[deg] = 1;
      // Divides iff remainder of m by g is zero.
      std::vector<long> r = poly_mod(m, g, p);
      if (r.empty()) return false;
    }
  }
  return true;
}

}  // namespace

Fq::Fq(long p, long f) : p_(p), f_(f) {
  if (p < 2 || !is_prime_u64((std::uint64_t)p)) throw UsageError("fq_make: p must be prime");
  if (f < 1) throw UsageError("fq_make: f must be at least 1");
  q_ = 1;
  for (long i = 0; i < f; ++i) {
    q_ *= p;
    if (q_ > 4096) throw UsageError("fq_make: field size exceeds the table budget (4096)");
  }

  // Lexicographically least monic irreducible: count through constant-first
  // coefficient tuples; the tuple order coincides with base-p counting where
  // the constant term is the least significant digit.
  for (long idx = 0;; ++idx) {
    if (idx >= q_) throw MathError("fq_make: no irreducible polynomial found");
    std::vector<long> m(f + 1, 0);
    long t = idx;
    for (long i = 0; i < f; ++i) {
      m[i] = t % p;
      t /= p;
    }
    m[f] = 1;
    if (poly_irreducible(m, p)) {
      modulus_ = m;
      break;
    }
  }

  auto decode = [&](long a) {
    std::vector<long> v;
    while (a) {
      v.push_back(a % p);
      a /= p;
    }
    return v;
  };
  auto encode = [&](const std::vector<long>& v) {
    long a = 0;
    for (long i = (long)v.size() - 1; i >= 0; --i) a = a * p + v[i];
    return a;
  };

  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, -1);
  for (long a = 0; a < q_; ++a) {
    auto va = decode(a);
    va.resize(f, 0);
    for (long b = 0; b < q_; ++b) {
      auto vb = decode(b);
      vb.resize(f, 0);
      std::vector<long> s(f);
      for (long i = 0; i < f; ++i) s[i] = (va[i] + vb[i]) % p;
      add_[a * q_ + b] = encode(s);
      mul_[a * q_ + b] = encode(poly_mulmod(poly_trim(va), poly_trim(vb), modulus_, p));
    }
    std::vector<long> n(f);
    for (long i = 0; i < f; ++i) n[i] = (p - va[i]) % p;
    neg_[a] = encode(n);
  }
  for (long a = 1; a < q_; ++a)
    for (long b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = b;

  trace_.assign(q_, 0);
  for (long a = 0; a < q_; ++a) {
    long acc = 0, x = a;
    for (long i = 0; i < f; ++i) {
      acc = add(acc, x);
      x = pow(x, p);
    }
    // The trace lands in the prime subfield, whose elements are the indices
    // 0..p-1 themselves.
    if (acc >= p) throw MathError("fq_make: trace left the prime subfield");
    trace_[a] = acc;
  }

  gen_ = 0;
  for (long a = 2; a < q_; ++a) {
    if (element_order(a) == q_ - 1) {
      gen_ = a;
      break;
    }
  }
  if (q_ == 2) gen_ = 1;
  if (gen_ == 0) throw MathError("fq_make: no primitive element found");
}

long Fq::inv(long a) const {
  if (a == 0) throw MathError("Fq: division by zero");
  return inv_[a];
}

long Fq::pow(long a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  long r = 1, b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

long Fq::pow_frobenius(long a, long k) const {
  long x = a;
  for (long i = 0; i < k; ++i) x = pow(x, p_);
  return x;
}

long Fq::element_order(long a) const {
  if (a == 0) throw MathError("Fq: order of zero");
  long o = 1, x = a;
  while (x != 1) {
    x = mul(x, a);
    ++o;
  }
  return o;
}

const Fq& fq_make(long p, long f) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, std::unique_ptr<Fq>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, f);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<Fq>(p, f)).first;
  return *it->second;
}

}  // namespace covkit
