#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <vector>

#include "covkit/chartab.hpp"

// Character table of an enumerated group from its class algebra. The
// structure constants a[i][j][t] = #{(x,y) in C_i x C_j : xy = rep_t} are
// computed exactly; a random integer combination of the class matrices is
// diagonalized numerically to locate the one-dimensional common eigenspaces;
// each eigenvector is then rebuilt exactly as eigenvalue multiplicities over
// the class power map, and the result is accepted only after the central
// characters reproduce the structure constants and both orthogonality
// relations hold. Failures restart with a fresh deterministic seed.

namespace covkit {

namespace {

struct ClassData {
  long k = 0;
  std::vector<int> rep;
  std::vector<long> size;
  std::vector<long> order;
  std::vector<long long> a;  // (i*k + j)*k + t

  long long at(long i, long j, long t) const {
    return a[(std::size_t)((i * k + j) * k + t)];
  }
};

ClassData structure_constants(const Group& G) {
  ClassData D;
  const auto& cls = G.classes();
  D.k = (long)cls.size();
  for (const ConjClass& c : cls) {
    D.rep.push_back(c.rep);
    D.size.push_back(c.size);
    D.order.push_back(c.element_order);
  }
  D.a.assign((std::size_t)(D.k * D.k * D.k), 0);
  for (long i = 0; i < D.k; ++i)
    for (int x : G.class_elements((int)i)) {
      int xinv = G.inv(x);
      for (long t = 0; t < D.k; ++t) {
        long j = G.class_of(G.mult(xinv, D.rep[(std::size_t)t]));
        ++D.a[(std::size_t)((i * D.k + j) * D.k + t)];
      }
    }
  for (long i = 0; i < D.k; ++i)
    for (long j = i + 1; j < D.k; ++j)
      for (long t = 0; t < D.k; ++t)
        if (D.at(i, j, t) != D.at(j, i, t))
          throw MathError("brute_table: class algebra is not commutative");
  return D;
}

// Classes of the power map rep_t^r, r = 0..order-1.
std::vector<std::vector<long>> power_classes(const Group& G, const ClassData& D) {
  std::vector<std::vector<long>> pw((std::size_t)D.k);
  for (long t = 0; t < D.k; ++t) {
    int g = D.rep[(std::size_t)t];
    int cur = G.identity();
    for (long r = 0; r < D.order[(std::size_t)t]; ++r) {
      pw[(std::size_t)t].push_back(G.class_of(cur));
      cur = G.mult(cur, g);
    }
  }
  return pw;
}

// One seeding attempt: may return an empty table on numeric failure.
bool try_attempt(const Group& G, const ClassData& D,
                 const std::vector<std::vector<long>>& pw, int attempt,
                 CharacterTable& out) {
  long k = D.k;
  double orderd = (double)G.order();
  const double pi = std::acos(-1.0);

  std::mt19937 rng(0x5eedu + 99991u * (unsigned)attempt);
  std::uniform_int_distribution<int> coeff(1, 97);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(k, k);
  for (long i = 0; i < k; ++i) {
    double ri = (double)coeff(rng);
    for (long j = 0; j < k; ++j)
      for (long t = 0; t < k; ++t) M(j, t) += ri * (double)D.at(i, j, t);
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(M);
  if (es.info() != Eigen::Success) return false;
  Eigen::MatrixXcd V = es.eigenvectors();

  std::vector<std::vector<CycloNum>> rows;
  for (long col = 0; col < k; ++col) {
    Eigen::VectorXcd v = V.col(col);
    std::complex<double> v0 = v(0);  // column 0 is the identity class
    if (std::abs(v0) < 1e-9) return false;

    std::vector<std::complex<double>> omega((std::size_t)k);
    double inv_norm = 0.0;
    for (long t = 0; t < k; ++t) {
      omega[(std::size_t)t] = v(t) / v0;
      inv_norm += std::norm(omega[(std::size_t)t]) / (double)D.size[(std::size_t)t];
    }
    double dapprox = std::sqrt(orderd / inv_norm);
    long d = std::lround(dapprox);
    if (d < 1 || std::abs(dapprox - (double)d) > 0.05) return false;

    std::vector<std::complex<double>> chi((std::size_t)k);
    for (long t = 0; t < k; ++t)
      chi[(std::size_t)t] = omega[(std::size_t)t] * (double)d / (double)D.size[(std::size_t)t];

    // chi(c_t) as eigenvalue multiplicities of zeta_o over the power map.
    std::vector<CycloNum> row((std::size_t)k);
    for (long t = 0; t < k; ++t) {
      long o = D.order[(std::size_t)t];
      CycloNum exact;
      long total = 0;
      for (long j = 0; j < o; ++j) {
        std::complex<double> nj(0.0, 0.0);
        for (long r = 0; r < o; ++r) {
          double phase = -2.0 * pi * (double)(j * r % o) / (double)o;
          nj += chi[(std::size_t)pw[(std::size_t)t][(std::size_t)r]] *
                std::polar(1.0, phase);
        }
        nj /= (double)o;
        long mult = std::lround(nj.real());
        if (std::abs(nj.real() - (double)mult) > 0.25 || std::abs(nj.imag()) > 0.25)
          return false;
        if (mult < 0) return false;
        total += mult;
        if (mult > 0) exact += CycloNum::zeta(o, j) * Rat(mult);
      }
      if (total != d) return false;
      row[(std::size_t)t] = exact;
    }
    rows.push_back(std::move(row));
  }

  // Exactly k distinct rows, the trivial one among them.
  std::sort(rows.begin(), rows.end(),
            [](const std::vector<CycloNum>& x, const std::vector<CycloNum>& y) {
              Rat dx = x[0].rational_value(), dy = y[0].rational_value();
              if (dx != dy) return dx < dy;
              for (std::size_t t = 0; t < x.size(); ++t) {
                if (x[t] == y[t]) continue;
                return x[t].str() < y[t].str();
              }
              return false;
            });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  if ((long)rows.size() != k) return false;

  std::vector<CycloNum> trivial((std::size_t)k, CycloNum(1));
  auto it = std::find(rows.begin(), rows.end(), trivial);
  if (it == rows.end()) return false;
  std::rotate(rows.begin(), it, it + 1);

  // Central characters must reproduce the structure constants exactly.
  std::vector<std::vector<CycloNum>> om((std::size_t)k);
  for (long r = 0; r < k; ++r) {
    Rat d = rows[(std::size_t)r][0].rational_value();
    for (long t = 0; t < k; ++t)
      om[(std::size_t)r].push_back(rows[(std::size_t)r][(std::size_t)t] *
                                   Rat(D.size[(std::size_t)t]) / d);
  }
  for (long r = 0; r < k; ++r)
    for (long i = 0; i < k; ++i)
      for (long j = i; j < k; ++j) {
        CycloNum lhs = om[(std::size_t)r][(std::size_t)i] * om[(std::size_t)r][(std::size_t)j];
        CycloNum rhs;
        for (long t = 0; t < k; ++t) {
          long c = (long)D.at(i, j, t);
          if (c) rhs += om[(std::size_t)r][(std::size_t)t] * Rat(c);
        }
        if (lhs != rhs) return false;
      }

  out.group_name = G.name();
  out.order = G.order();
  out.provenance = Provenance::BruteForce;
  out.classes.clear();
  for (long t = 0; t < k; ++t)
    out.classes.push_back({"c" + std::to_string(t), BigInt(D.size[(std::size_t)t]),
                           D.order[(std::size_t)t]});
  out.rows = std::move(rows);
  validate_table(out);
  return true;
}

}  // namespace

CharacterTable brute_table(const Group& G) {
  if (G.order() > 10000) throw MathError("brute_table: order budget exceeded");
  if (G.classes().size() > 60) throw MathError("brute_table: class count budget exceeded");

  ClassData D = structure_constants(G);
  auto pw = power_classes(G, D);

  for (int attempt = 0; attempt < 8; ++attempt) {
    CharacterTable T;
    bool ok;
    try {
      ok = try_attempt(G, D, pw, attempt, T);
    } catch (const MathError&) {
      ok = false;  // a failed exact check on this seeding; try the next
    }
    if (ok) return T;
  }
  throw MathError("brute_table: eigenvector seeding failed to separate the classes");
}

}  // namespace covkit
