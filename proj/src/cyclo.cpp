#include "covkit/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>

#include "covkit/numtheory.hpp"

namespace covkit {

namespace {

using ll = long long;

constexpr ll kCoeffGuard = 1ll << 58;

void guard(ll v) {
  if (v > kCoeffGuard || v < -kCoeffGuard)
    throw MathError("cyclo: basis-reduction coefficient overflow");
}

// Integer polynomials, low degree first, exact arithmetic in long long.
std::vector<ll> poly_exact_div(const std::vector<ll>& num, const std::vector<ll>& den) {
  std::vector<ll> r = num;
  long dn = (long)r.size() - 1, dd = (long)den.size() - 1;
  std::vector<ll> q(dn - dd + 1, 0);
  for (long i = dn; i >= dd; --i) {
    if (r[i] == 0) continue;
    if (r[i] % den[dd] != 0) throw MathError("cyclo: non-exact polynomial division");
    ll c = r[i] / den[dd];
    q[i - dd] = c;
    for (long j = 0; j <= dd; ++j) {
      r[i - dd + j] -= c * den[j];
      guard(r[i - dd + j]);
    }
  }
  for (ll v : r)
    if (v != 0) throw MathError("cyclo: non-exact polynomial division");
  return q;
}

// Coefficients of the n-th cyclotomic polynomial.
std::vector<ll> cyclotomic_coeffs(long n) {
  // x^n - 1 divided by the product of Phi_d over proper divisors d of n,
  // built bottom-up.
  std::map<long, std::vector<ll>> phi;
  for (long d : divisors(n)) {
    std::vector<ll> f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    for (long e : divisors(d)) {
      if (e == d) continue;
      f = poly_exact_div(f, phi[e]);
    }
    phi[d] = f;
  }
  return phi[n];
}

// Exact linear solve T y = rhs over Q; T given by rows, full column rank not
// assumed. Returns the unique solution when the system is consistent and the
// columns are independent; nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_exact(std::vector<std::vector<Rat>> rows,
                                            std::vector<Rat> rhs) {
  std::size_t m = rows.size();
  std::size_t ncols = m ? rows[0].size() : 0;
  std::vector<long> pivot_of_col(ncols, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < m; ++col) {
    std::size_t sel = m;
    for (std::size_t r = rank; r < m; ++r) {
      if (rows[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel == m) continue;
    std::swap(rows[rank], rows[sel]);
    std::swap(rhs[rank], rhs[sel]);
    Rat inv = rows[rank][col];
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rat f = rows[r][col] / inv;
      for (std::size_t c2 = col; c2 < ncols; ++c2) rows[r][c2] -= f * rows[rank][c2];
      rhs[r] -= f * rhs[rank];
    }
    pivot_of_col[col] = (long)rank;
    ++rank;
  }
  for (std::size_t r = rank; r < m; ++r)
    if (rhs[r] != 0) return std::nullopt;
  std::vector<Rat> y(ncols, Rat(0));
  for (std::size_t col = 0; col < ncols; ++col) {
    long pr = pivot_of_col[col];
    if (pr < 0) {
      // Dependent column: only consistent if it never carries weight; with
      // independent cyclotomic basis columns this does not occur.
      continue;
    }
    y[col] = rhs[pr] / rows[pr][col];
  }
  return y;
}

}  // namespace

CycloField::CycloField(long n) : n_(n) {
  if (n < 1) throw UsageError("cyclo: conductor must be positive");
  phi_ = euler_phi(n);
  if ((double)n * (double)phi_ > 2e7)
    throw UsageError("cyclo: conductor " + std::to_string(n) +
                     " exceeds the workspace budget");
  std::vector<ll> modulus = cyclotomic_coeffs(n);
  pow_.assign(n, std::vector<ll>(phi_, 0));
  pow_[0][0] = 1;
  for (long e = 1; e < n; ++e) {
    const auto& prev = pow_[e - 1];
    auto& cur = pow_[e];
    ll top = prev[phi_ - 1];
    for (long i = phi_ - 1; i >= 1; --i) cur[i] = prev[i - 1];
    cur[0] = 0;
    if (top != 0) {
      // x^phi = -(lower part of the modulus), since the modulus is monic.
      for (long i = 0; i < phi_; ++i) {
        cur[i] -= top * modulus[i];
        guard(cur[i]);
      }
    }
  }
}

CycloField::Vec CycloField::from_rat(const Rat& r) const {
  Vec v(phi_, Rat(0));
  v[0] = r;
  return v;
}

CycloField::Vec CycloField::zeta_pow(long e) const {
  long m = ((e % n_) + n_) % n_;
  Vec v(phi_, Rat(0));
  const auto& row = pow_[m];
  for (long i = 0; i < phi_; ++i) v[i] = Rat((long)row[i]);
  return v;
}

void CycloField::add_into(Vec& acc, const Vec& x) const {
  for (long i = 0; i < phi_; ++i) acc[i] += x[i];
}

void CycloField::sub_into(Vec& acc, const Vec& x) const {
  for (long i = 0; i < phi_; ++i) acc[i] -= x[i];
}

void CycloField::add_scaled(Vec& acc, const Rat& c, const Vec& x) const {
  if (c == 0) return;
  for (long i = 0; i < phi_; ++i) acc[i] += c * x[i];
}

void CycloField::scale(Vec& v, const Rat& c) const {
  for (long i = 0; i < phi_; ++i) v[i] *= c;
}

CycloField::Vec CycloField::mul(const Vec& a, const Vec& b) const {
  std::vector<Rat> conv(2 * phi_ - 1, Rat(0));
  for (long i = 0; i < phi_; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; j < phi_; ++j) {
      if (b[j] == 0) continue;
      conv[i + j] += a[i] * b[j];
    }
  }
  Vec out(phi_, Rat(0));
  for (long i = 0; i < phi_; ++i) out[i] = conv[i];
  for (long m = phi_; m <= 2 * phi_ - 2; ++m) {
    if (conv[m] == 0) continue;
    const auto& row = pow_[m % n_];
    for (long i = 0; i < phi_; ++i) {
      if (row[i] != 0) out[i] += conv[m] * Rat((long)row[i]);
    }
  }
  return out;
}

CycloField::Vec CycloField::galois(const Vec& a, long k) const {
  long km = ((k % n_) + n_) % n_;
  if (std::gcd(km, n_) != 1) throw UsageError("cyclo: Galois exponent not coprime to conductor");
  Vec out(phi_, Rat(0));
  for (long i = 0; i < phi_; ++i) {
    if (a[i] == 0) continue;
    const auto& row = pow_[(long)(((long long)i * km) % n_)];
    for (long j = 0; j < phi_; ++j)
      if (row[j] != 0) out[j] += a[i] * Rat((long)row[j]);
  }
  return out;
}

bool CycloField::is_zero(const Vec& a) const {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

CycloField::Vec CycloField::lift_from(const CycloField& sub, const Vec& a) const {
  if (n_ % sub.n() != 0) throw UsageError("cyclo: lift target is not a multiple conductor");
  long r = n_ / sub.n();
  Vec out(phi_, Rat(0));
  for (long i = 0; i < sub.phi(); ++i) {
    if (a[i] == 0) continue;
    const auto& row = pow_[(long)(((long long)i * r) % n_)];
    for (long j = 0; j < phi_; ++j)
      if (row[j] != 0) out[j] += a[i] * Rat((long)row[j]);
  }
  return out;
}

const CycloField& cyclo_field(long n) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<CycloField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<CycloField>(n)).first;
  return *it->second;
}

CycloNum CycloNum::zeta(long n, long e) {
  if (n < 1) throw UsageError("cyclo: E(n) requires n >= 1");
  const CycloField& F = cyclo_field(n);
  return from_raw(F, F.zeta_pow(e));
}

CycloNum CycloNum::from_raw(const CycloField& F, const CycloField::Vec& v) {
  if (F.is_zero(v)) return CycloNum();
  long n = F.n();
  if (n == 1) return CycloNum(v[0]);
  // Minimal conductor: try divisors in ascending order. Conductors 2 mod 4
  // never arise (Q(zeta_{2m}) = Q(zeta_m) for odd m), so they are skipped.
  for (long d : divisors(n)) {
    if (d % 4 == 2) continue;
    if (d == n) break;
    const CycloField& S = cyclo_field(d);
    // Columns are the coordinates of zeta_d^j inside the ambient field.
    std::vector<std::vector<Rat>> rows((std::size_t)F.phi(),
                                       std::vector<Rat>((std::size_t)S.phi(), Rat(0)));
    long r = n / d;
    for (long j = 0; j < S.phi(); ++j) {
      const auto& col = F.pow_row((long)(((long long)j * r) % n));
      for (long i = 0; i < F.phi(); ++i) rows[i][j] = Rat((long)col[i]);
    }
    auto sol = solve_exact(std::move(rows), v);
    if (sol) {
      CycloNum z;
      z.cond_ = d;
      z.c_ = std::move(*sol);
      if (d == 1 && z.c_.empty()) z.c_ = {Rat(0)};
      return z;
    }
  }
  CycloNum z;
  z.cond_ = n;
  z.c_ = v;
  return z;
}

Rat CycloNum::rational_value() const {
  if (cond_ != 1) throw MathError("cyclo: value is not rational");
  return c_[0];
}

bool CycloNum::is_real() const { return *this == conj(); }

bool CycloNum::is_integer() const {
  return cond_ == 1 && c_[0].get_den() == 1;
}

CycloNum CycloNum::conj() const {
  if (cond_ == 1) return *this;
  const CycloField& F = cyclo_field(cond_);
  return from_raw(F, F.conj(c_));
}

CycloNum CycloNum::galois(long k) const {
  if (cond_ == 1) return *this;
  const CycloField& F = cyclo_field(cond_);
  return from_raw(F, F.galois(c_, k));
}

CycloNum CycloNum::pow(long k) const {
  if (k < 0) throw UsageError("cyclo: negative powers are not supported");
  CycloNum r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

namespace {

const CycloField& common_field(const CycloNum& a, const CycloNum& b, long& la, long& lb) {
  long n = std::lcm(a.conductor(), b.conductor());
  la = n / a.conductor();
  lb = n / b.conductor();
  return cyclo_field(n);
}

CycloField::Vec lift_into(const CycloField& F, const CycloNum& z) {
  if (z.conductor() == F.n()) return z.coeffs();
  return F.lift_from(cyclo_field(z.conductor()), z.coeffs());
}

}  // namespace

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  if (a.conductor() == 1 && b.conductor() == 1)
    return CycloNum(a.coeffs()[0] + b.coeffs()[0]);
  long la, lb;
  const CycloField& F = common_field(a, b, la, lb);
  auto va = lift_into(F, a);
  F.add_into(va, lift_into(F, b));
  return CycloNum::from_raw(F, va);
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) {
  if (a.conductor() == 1 && b.conductor() == 1)
    return CycloNum(a.coeffs()[0] - b.coeffs()[0]);
  long la, lb;
  const CycloField& F = common_field(a, b, la, lb);
  auto va = lift_into(F, a);
  F.sub_into(va, lift_into(F, b));
  return CycloNum::from_raw(F, va);
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  if (a.conductor() == 1 && b.conductor() == 1)
    return CycloNum(a.coeffs()[0] * b.coeffs()[0]);
  if (a.is_zero() || b.is_zero()) return CycloNum();
  if (a.conductor() == 1) return b * a.coeffs()[0];
  if (b.conductor() == 1) return a * b.coeffs()[0];
  long la, lb;
  const CycloField& F = common_field(a, b, la, lb);
  return CycloNum::from_raw(F, F.mul(lift_into(F, a), lift_into(F, b)));
}

CycloNum CycloNum::operator-() const {
  CycloNum z = *this;
  for (auto& c : z.c_) c = -c;
  return z;
}

CycloNum operator*(const CycloNum& a, const Rat& r) {
  if (r == 0) return CycloNum();
  CycloNum z = a;
  for (auto& c : z.c_) c *= r;
  return z;
}

CycloNum operator/(const CycloNum& a, const Rat& r) {
  if (r == 0) throw MathError("cyclo: division by zero");
  CycloNum z = a;
  for (auto& c : z.c_) c /= r;
  return z;
}

std::string CycloNum::str() const { return cyclo_print(*this); }

std::complex<double> CycloNum::approx() const {
  std::complex<double> acc(0.0, 0.0);
  const double tau = 6.283185307179586476925;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    double w = c_[j].get_d();
    double ang = tau * (double)j / (double)cond_;
    acc += w * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Parsing and printing
// ---------------------------------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw UsageError("cyclo_parse: " + what + " at position " + std::to_string(pos));
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  BigInt integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) fail("expected an integer");
    return BigInt(s.substr(start, pos - start));
  }

  long small_int(const char* what) {
    BigInt v = integer();
    if (!v.fits_slong_p()) fail(std::string(what) + " out of range");
    return v.get_si();
  }

  CycloNum factor() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    if (eat('-')) return -factor();
    if (eat('(')) {
      CycloNum e = expr();
      expect(')');
      return e;
    }
    if (s[pos] == 'E') {
      ++pos;
      expect('(');
      long n = small_int("root-of-unity order");
      if (n < 1) fail("E(n) requires n >= 1");
      expect(')');
      long e = 1;
      if (eat('^')) {
        bool neg = eat('-');
        e = small_int("exponent");
        if (neg) e = -e;
      }
      return CycloNum::zeta(n, e);
    }
    if (std::isdigit((unsigned char)s[pos])) return CycloNum(integer());
    fail("expected a factor");
  }

  CycloNum term() {
    CycloNum acc = factor();
    for (;;) {
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        CycloNum d = factor();
        if (!d.is_rational()) fail("division only by rational values");
        Rat r = d.rational_value();
        if (r == 0) fail("division by zero");
        acc = acc / r;
      } else {
        return acc;
      }
    }
  }

  CycloNum expr() {
    CycloNum acc = term();
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }
};

std::string rat_str(const Rat& r) { return to_string(r); }

}  // namespace

CycloNum cyclo_parse(const std::string& text) {
  Parser p(text);
  CycloNum z = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return z;
}

std::string cyclo_print(const CycloNum& z) {
  if (z.is_rational()) return rat_str(z.rational_value());
  long n = z.conductor();
  std::string out;
  const auto& c = z.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    std::string term;
    if (j == 0) {
      term = rat_str(c[0]);
    } else {
      std::string base = "E(" + std::to_string(n) + ")";
      if (j > 1) base += "^" + std::to_string(j);
      if (c[j] == 1)
        term = base;
      else if (c[j] == -1)
        term = "-" + base;
      else
        term = rat_str(c[j]) + "*" + base;
    }
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += term;
    else
      out += "+" + term;
  }
  return out;
}

CycloNum cyclo_abs2(const CycloNum& z) { return z * z.conj(); }

// ---------------------------------------------------------------------------
// Square roots via quadratic Gauss sums
// ---------------------------------------------------------------------------

namespace {

// Legendre symbol via Euler's criterion.
long legendre(long k, long p) {
  std::uint64_t r = 1, b = (std::uint64_t)(((k % p) + p) % p), e = (std::uint64_t)(p - 1) / 2,
                m = (std::uint64_t)p;
  if (b == 0) return 0;
  while (e) {
    if (e & 1) r = (unsigned __int128)r * b % m;
    b = (unsigned __int128)b * b % m;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

// The prime Gauss sum g_p = sum_k legendre(k) zeta_p^k; equals sqrt(p) for
// p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4.
CycloNum prime_gauss_sum(long p) {
  const CycloField& F = cyclo_field(p);
  auto acc = F.zero();
  for (long k = 1; k < p; ++k) {
    auto zk = F.zeta_pow(k);
    if (legendre(k, p) == 1)
      F.add_into(acc, zk);
    else
      F.sub_into(acc, zk);
  }
  return CycloNum::from_raw(F, acc);
}

}  // namespace

CycloNum sqrt_of_integer(const BigInt& m) {
  if (m == 0) return CycloNum();
  BigInt a = abs(m);
  BigInt whole = 1;
  long squarefree = 1;
  for (auto& [p, e] : factorize(a)) {
    for (int i = 0; i < e / 2; ++i) whole *= p;
    if (e % 2) {
      if (!p.fits_slong_p() || squarefree > 1000000 / p.get_si())
        throw UsageError("sqrt_of_integer: squarefree part exceeds the conductor budget");
      squarefree *= p.get_si();
    }
  }
  CycloNum res{whole};
  if (squarefree % 2 == 0) {
    // sqrt(2) = zeta_8 + zeta_8^-1.
    res *= CycloNum::zeta(8, 1) + CycloNum::zeta(8, 7);
    squarefree /= 2;
  }
  int i_power = m < 0 ? 1 : 0;  // sqrt(-1) contributes one factor of i
  for (auto& [pp, e] : factorize(squarefree)) {
    (void)e;
    long p = pp.get_si();
    res *= prime_gauss_sum(p);
    if (p % 4 == 3) i_power -= 1;  // g_p = i*sqrt(p), so divide one i back out
  }
  int t = ((i_power % 4) + 4) % 4;
  if (t) res *= CycloNum::zeta(4, 1).pow(t);
  return res;
}

CycloNum gauss_sum_fq(const Fq& F) {
  long p = F.p();
  const CycloField& C = cyclo_field(p);
  std::vector<long> counts(p, 0);
  for (long x = 0; x < F.q(); ++x) counts[F.trace(F.mul(x, x))]++;
  auto acc = C.zero();
  for (long t = 0; t < p; ++t) {
    if (counts[t] == 0) continue;
    C.add_scaled(acc, Rat(counts[t]), C.zeta_pow(t));
  }
  return CycloNum::from_raw(C, acc);
}

}  // namespace covkit
