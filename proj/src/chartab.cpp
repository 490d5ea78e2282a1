#include "covkit/chartab.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "covkit/numtheory.hpp"

namespace covkit {

namespace {

std::string pair_msg(const char* what, long a, long b) {
  std::ostringstream os;
  os << what << " (" << a << ", " << b << ")";
  return os.str();
}

// zeta_n^a + zeta_n^-a
CycloNum zeta_sum(long n, long a) {
  return CycloNum::zeta(n, a) + CycloNum::zeta(n, -a);
}

bool integer_entries(const CharacterTable& T, std::vector<std::vector<BigInt>>& X) {
  X.assign(T.rows.size(), {});
  for (std::size_t r = 0; r < T.rows.size(); ++r) {
    X[r].reserve(T.rows[r].size());
    for (const CycloNum& v : T.rows[r]) {
      if (!v.is_rational()) return false;
      Rat rv = v.rational_value();
      if (rv.get_den() != 1) return false;
      X[r].push_back(BigInt(rv.get_num()));
    }
  }
  return true;
}

void validate_orthogonality_int(const CharacterTable& T,
                                const std::vector<std::vector<BigInt>>& X) {
  long k = T.k();
  // Row (first) orthogonality: sum_t |C_t| x_r(t) x_s(t) = delta_rs |G|.
  for (long r = 0; r < k; ++r)
    for (long s = r; s < k; ++s) {
      BigInt acc = 0;
      for (long t = 0; t < k; ++t) acc += T.classes[t].size * X[r][t] * X[s][t];
      if (acc != (r == s ? T.order : BigInt(0)))
        throw MathError(std::string("table: first orthogonality fails at rows ") +
                        pair_msg("", r, s));
    }
  // Column (second) orthogonality: sum_r x_r(t) x_r(u) = delta_tu |G|/|C_t|.
  for (long t = 0; t < k; ++t)
    for (long u = t; u < k; ++u) {
      BigInt acc = 0;
      for (long r = 0; r < k; ++r) acc += X[r][t] * X[r][u];
      BigInt want = 0;
      if (t == u) want = T.order / T.classes[t].size;
      if (acc != want)
        throw MathError(std::string("table: second orthogonality fails at columns ") +
                        pair_msg("", t, u));
    }
}

void validate_orthogonality_cyclo(const CharacterTable& T) {
  long k = T.k();
  std::vector<std::vector<CycloNum>> conj(T.rows.size());
  for (std::size_t r = 0; r < T.rows.size(); ++r) {
    conj[r].reserve(T.rows[r].size());
    for (const CycloNum& v : T.rows[r]) conj[r].push_back(v.conj());
  }
  for (long r = 0; r < k; ++r)
    for (long s = r; s < k; ++s) {
      CycloNum acc;
      for (long t = 0; t < k; ++t)
        acc += T.rows[(std::size_t)r][(std::size_t)t] * conj[(std::size_t)s][(std::size_t)t] *
               Rat(T.classes[(std::size_t)t].size);
      CycloNum want = (r == s) ? CycloNum(T.order) : CycloNum();
      if (acc != want)
        throw MathError(std::string("table: first orthogonality fails at rows ") +
                        pair_msg("", r, s));
    }
  for (long t = 0; t < k; ++t)
    for (long u = t; u < k; ++u) {
      CycloNum acc;
      for (long r = 0; r < k; ++r)
        acc += T.rows[(std::size_t)r][(std::size_t)t] * conj[(std::size_t)r][(std::size_t)u];
      CycloNum want;
      if (t == u) {
        BigInt cent = T.order / T.classes[(std::size_t)t].size;
        want = CycloNum(cent);
      }
      if (acc != want)
        throw MathError(std::string("table: second orthogonality fails at columns ") +
                        pair_msg("", t, u));
    }
}

}  // namespace

BigInt CharacterTable::degree(long r) const {
  const CycloNum& v = rows[(std::size_t)r][0];
  if (!v.is_rational()) throw MathError("table: degree is not rational");
  Rat d = v.rational_value();
  if (d.get_den() != 1 || d.get_num() <= 0)
    throw MathError("table: degree is not a positive integer");
  return BigInt(d.get_num());
}

long CharacterTable::inverse_class(long c) const {
  for (long c2 = 0; c2 < k(); ++c2) {
    bool ok = true;
    for (const auto& row : rows)
      if (row[(std::size_t)c2] != row[(std::size_t)c].conj()) {
        ok = false;
        break;
      }
    if (ok) return c2;
  }
  throw MathError("table: no column is conjugate to column " + std::to_string(c));
}

void validate_table(const CharacterTable& T) {
  long k = T.k();
  if (k <= 0) throw MathError("table: empty");
  if ((long)T.rows.size() != k)
    throw MathError("table: row count differs from class count");
  for (const auto& row : T.rows)
    if ((long)row.size() != k) throw MathError("table: ragged rows");
  if (T.order <= 0) throw MathError("table: nonpositive order");

  BigInt size_sum = 0;
  for (long t = 0; t < k; ++t) {
    const ClassInfo& c = T.classes[(std::size_t)t];
    if (c.size <= 0) throw MathError("table: nonpositive class size");
    if (c.element_order < 1) throw MathError("table: element order below 1");
    if (T.order % c.size != 0)
      throw MathError("table: class size does not divide the order at column " +
                      std::to_string(t));
    size_sum += c.size;
  }
  if (size_sum != T.order) throw MathError("table: class sizes do not sum to the order");
  if (T.classes[0].size != 1 || T.classes[0].element_order != 1)
    throw MathError("table: column 0 is not the identity class");

  for (long t = 0; t < k; ++t)
    if (T.rows[0][(std::size_t)t] != CycloNum(1))
      throw MathError("table: row 0 is not the trivial character");

  BigInt deg_sq = 0;
  for (long r = 0; r < k; ++r) {
    BigInt d = T.degree(r);
    deg_sq += d * d;
  }
  if (deg_sq != T.order)
    throw MathError("table: squared degrees do not sum to the order");

  std::vector<std::vector<BigInt>> X;
  if (integer_entries(T, X))
    validate_orthogonality_int(T, X);
  else
    validate_orthogonality_cyclo(T);
}

BigInt min_nontrivial_degree(const CharacterTable& T) {
  if (T.k() < 2) throw UsageError("min_nontrivial_degree: table has no nontrivial rows");
  BigInt best = 0;
  for (long r = 1; r < T.k(); ++r) {
    BigInt d = T.degree(r);
    if (best == 0 || d < best) best = d;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Generic tables for the SL2 family.
// ---------------------------------------------------------------------------

namespace {

// Column descriptions shared by the family constructions. "kind" selects the
// value formula; "par" is the torus exponent for kinds A and B.
struct Col {
  enum Kind { ID, Z, C, D, ZC, ZD, A, B, U } kind;
  long par = 0;
  std::string label;
  BigInt size;
  long order = 1;
};

CharacterTable assemble(const std::string& name, const BigInt& order,
                        const std::vector<Col>& cols,
                        const std::vector<std::function<CycloNum(const Col&)>>& rowfns) {
  CharacterTable T;
  T.group_name = name;
  T.order = order;
  T.provenance = Provenance::GenericSL2Family;
  for (const Col& c : cols) T.classes.push_back({c.label, c.size, c.order});
  for (const auto& fn : rowfns) {
    std::vector<CycloNum> row;
    row.reserve(cols.size());
    for (const Col& c : cols) row.push_back(fn(c));
    T.rows.push_back(std::move(row));
  }
  validate_table(T);
  return T;
}

std::string lbl(const char* stem, long i) { return std::string(stem) + std::to_string(i); }

// SL2(q) = PSL2(q) = PGL2(q) for q even: q+1 classes.
CharacterTable sl2_table_even(const std::string& name, long q) {
  BigInt order = BigInt(q) * (q * q - 1);
  std::vector<Col> cols;
  cols.push_back({Col::ID, 0, "1", 1, 1});
  cols.push_back({Col::C, 0, "c", BigInt(q) * q - 1, 2});
  for (long l = 1; l <= (q - 2) / 2; ++l)
    cols.push_back({Col::A, l, lbl("a", l), BigInt(q) * (q + 1), (q - 1) / std::gcd(l, q - 1)});
  for (long m = 1; m <= q / 2; ++m)
    cols.push_back({Col::B, m, lbl("b", m), BigInt(q) * (q - 1), (q + 1) / std::gcd(m, q + 1)});

  std::vector<std::function<CycloNum(const Col&)>> rows;
  rows.push_back([](const Col&) { return CycloNum(1); });
  rows.push_back([q](const Col& c) {  // Steinberg
    switch (c.kind) {
      case Col::ID: return CycloNum(q);
      case Col::C: return CycloNum(0);
      case Col::A: return CycloNum(1);
      default: return CycloNum(-1);
    }
  });
  for (long i = 1; i <= (q - 2) / 2; ++i)
    rows.push_back([q, i](const Col& c) {  // principal series
      switch (c.kind) {
        case Col::ID: return CycloNum(q + 1);
        case Col::C: return CycloNum(1);
        case Col::A: return zeta_sum(q - 1, i * c.par);
        default: return CycloNum(0);
      }
    });
  for (long j = 1; j <= q / 2; ++j)
    rows.push_back([q, j](const Col& c) {  // discrete series
      switch (c.kind) {
        case Col::ID: return CycloNum(q - 1);
        case Col::C: return CycloNum(-1);
        case Col::A: return CycloNum(0);
        default: return -zeta_sum(q + 1, j * c.par);
      }
    });
  return assemble(name, order, cols, rows);
}

// SL2(q), q odd: q+4 classes. eps = (-1)^((q-1)/2); tau is the quadratic
// Gauss sum over F_q, with tau^2 = eps*q.
CharacterTable sl2_table_odd(const std::string& name, long q, long p, long f) {
  BigInt order = BigInt(q) * (q * q - 1);
  long eps = ((q - 1) / 2) % 2 == 0 ? 1 : -1;
  CycloNum tau = gauss_sum_fq(fq_make(p, f));
  BigInt uni = (BigInt(q) * q - 1) / 2;

  std::vector<Col> cols;
  cols.push_back({Col::ID, 0, "1", 1, 1});
  cols.push_back({Col::Z, 0, "z", 1, 2});
  cols.push_back({Col::C, 0, "c", uni, p});
  cols.push_back({Col::D, 0, "d", uni, p});
  cols.push_back({Col::ZC, 0, "zc", uni, 2 * p});
  cols.push_back({Col::ZD, 0, "zd", uni, 2 * p});
  for (long l = 1; l <= (q - 3) / 2; ++l)
    cols.push_back({Col::A, l, lbl("a", l), BigInt(q) * (q + 1), (q - 1) / std::gcd(l, q - 1)});
  for (long m = 1; m <= (q - 1) / 2; ++m)
    cols.push_back({Col::B, m, lbl("b", m), BigInt(q) * (q - 1), (q + 1) / std::gcd(m, q + 1)});

  auto sgn = [](long i) { return i % 2 == 0 ? 1 : -1; };

  std::vector<std::function<CycloNum(const Col&)>> rows;
  rows.push_back([](const Col&) { return CycloNum(1); });
  rows.push_back([q](const Col& c) {  // Steinberg (factors through the quotient)
    switch (c.kind) {
      case Col::ID:
      case Col::Z: return CycloNum(q);
      case Col::A: return CycloNum(1);
      case Col::B: return CycloNum(-1);
      default: return CycloNum(0);
    }
  });
  for (long i = 1; i <= (q - 3) / 2; ++i)
    rows.push_back([q, i, sgn](const Col& c) {  // principal series
      switch (c.kind) {
        case Col::ID: return CycloNum(q + 1);
        case Col::Z: return CycloNum(sgn(i) * (q + 1));
        case Col::C:
        case Col::D: return CycloNum(1);
        case Col::ZC:
        case Col::ZD: return CycloNum(sgn(i));
        case Col::A: return zeta_sum(q - 1, i * c.par);
        default: return CycloNum(0);
      }
    });
  for (long j = 1; j <= (q - 1) / 2; ++j)
    rows.push_back([q, j, sgn](const Col& c) {  // discrete series
      switch (c.kind) {
        case Col::ID: return CycloNum(q - 1);
        case Col::Z: return CycloNum(sgn(j) * (q - 1));
        case Col::C:
        case Col::D: return CycloNum(-1);
        case Col::ZC:
        case Col::ZD: return CycloNum(-sgn(j));
        case Col::A: return CycloNum(0);
        default: return -zeta_sum(q + 1, j * c.par);
      }
    });
  // The four exceptional characters, split off the degenerate series at the
  // order-2 torus characters. s = +1 picks the +tau member of each pair.
  auto xi = [q, eps, tau, sgn](long s) {
    return std::function<CycloNum(const Col&)>([q, eps, tau, sgn, s](const Col& c) {
      CycloNum t = (s > 0) ? tau : -tau;
      switch (c.kind) {
        case Col::ID: return CycloNum((q + 1) / 2);
        case Col::Z: return CycloNum(eps * (q + 1) / 2);
        case Col::C: return (CycloNum(1) + t) / Rat(2);
        case Col::D: return (CycloNum(1) - t) / Rat(2);
        case Col::ZC: return (CycloNum(1) + t) * Rat(eps) / Rat(2);
        case Col::ZD: return (CycloNum(1) - t) * Rat(eps) / Rat(2);
        case Col::A: return CycloNum(sgn(c.par));
        default: return CycloNum(0);
      }
    });
  };
  auto eta = [q, eps, tau, sgn](long s) {
    return std::function<CycloNum(const Col&)>([q, eps, tau, sgn, s](const Col& c) {
      CycloNum t = (s > 0) ? tau : -tau;
      switch (c.kind) {
        case Col::ID: return CycloNum((q - 1) / 2);
        case Col::Z: return CycloNum(-eps * (q - 1) / 2);
        case Col::C: return (CycloNum(-1) + t) / Rat(2);
        case Col::D: return (CycloNum(-1) - t) / Rat(2);
        case Col::ZC: return (CycloNum(-1) + t) * Rat(-eps) / Rat(2);
        case Col::ZD: return (CycloNum(-1) - t) * Rat(-eps) / Rat(2);
        case Col::A: return CycloNum(0);
        default: return CycloNum(-sgn(c.par));
      }
    });
  };
  rows.push_back(xi(+1));
  rows.push_back(xi(-1));
  rows.push_back(eta(+1));
  rows.push_back(eta(-1));
  return assemble(name, order, cols, rows);
}

// PSL2(q), q odd: (q+5)/2 classes. Columns are the z-fused SL2 classes with
// torus exponents reduced to the quotient range; rows are the SL2 rows with
// trivial central character.
CharacterTable psl2_table_odd(const std::string& name, long q, long p, long f) {
  BigInt order = BigInt(q) * (q * q - 1) / 2;
  long eps = ((q - 1) / 2) % 2 == 0 ? 1 : -1;
  CycloNum tau = gauss_sum_fq(fq_make(p, f));
  BigInt uni = (BigInt(q) * q - 1) / 2;
  long half_a = (q - 1) / 2, half_b = (q + 1) / 2;
  long La = (q % 4 == 1) ? (q - 1) / 4 : (q - 3) / 4;
  long Lb = (q % 4 == 3) ? (q + 1) / 4 : (q - 1) / 4;

  std::vector<Col> cols;
  cols.push_back({Col::ID, 0, "1", 1, 1});
  cols.push_back({Col::C, 0, "c", uni, p});
  cols.push_back({Col::D, 0, "d", uni, p});
  for (long l = 1; l <= La; ++l) {
    BigInt size = BigInt(q) * (q + 1);
    if (q % 4 == 1 && l == La) size /= 2;  // the self-paired involution class
    cols.push_back({Col::A, l, lbl("a", l), size, half_a / std::gcd(l, half_a)});
  }
  for (long m = 1; m <= Lb; ++m) {
    BigInt size = BigInt(q) * (q - 1);
    if (q % 4 == 3 && m == Lb) size /= 2;
    cols.push_back({Col::B, m, lbl("b", m), size, half_b / std::gcd(m, half_b)});
  }

  auto sgn = [](long i) { return i % 2 == 0 ? 1 : -1; };

  std::vector<std::function<CycloNum(const Col&)>> rows;
  rows.push_back([](const Col&) { return CycloNum(1); });
  rows.push_back([q](const Col& c) {  // Steinberg
    switch (c.kind) {
      case Col::ID: return CycloNum(q);
      case Col::A: return CycloNum(1);
      case Col::B: return CycloNum(-1);
      default: return CycloNum(0);
    }
  });
  for (long i = 2; i <= (q - 3) / 2; i += 2)
    rows.push_back([q, i](const Col& c) {
      switch (c.kind) {
        case Col::ID: return CycloNum(q + 1);
        case Col::C:
        case Col::D: return CycloNum(1);
        case Col::A: return zeta_sum(q - 1, i * c.par);
        default: return CycloNum(0);
      }
    });
  for (long j = 2; j <= (q - 1) / 2; j += 2)
    rows.push_back([q, j](const Col& c) {
      switch (c.kind) {
        case Col::ID: return CycloNum(q - 1);
        case Col::C:
        case Col::D: return CycloNum(-1);
        case Col::A: return CycloNum(0);
        default: return -zeta_sum(q + 1, j * c.par);
      }
    });
  // Exactly one exceptional pair has trivial central character.
  for (long s : {+1L, -1L}) {
    if (eps == 1)
      rows.push_back([q, tau, sgn, s](const Col& c) {
        CycloNum t = (s > 0) ? tau : -tau;
        switch (c.kind) {
          case Col::ID: return CycloNum((q + 1) / 2);
          case Col::C: return (CycloNum(1) + t) / Rat(2);
          case Col::D: return (CycloNum(1) - t) / Rat(2);
          case Col::A: return CycloNum(sgn(c.par));
          default: return CycloNum(0);
        }
      });
    else
      rows.push_back([q, tau, sgn, s](const Col& c) {
        CycloNum t = (s > 0) ? tau : -tau;
        switch (c.kind) {
          case Col::ID: return CycloNum((q - 1) / 2);
          case Col::C: return (CycloNum(-1) + t) / Rat(2);
          case Col::D: return (CycloNum(-1) - t) / Rat(2);
          case Col::A: return CycloNum(0);
          default: return CycloNum(-sgn(c.par));
        }
      });
  }
  return assemble(name, order, cols, rows);
}

// PGL2(q), q odd: q+2 classes.
CharacterTable pgl2_table_odd(const std::string& name, long q, long p) {
  BigInt order = BigInt(q) * (q * q - 1);

  std::vector<Col> cols;
  cols.push_back({Col::ID, 0, "1", 1, 1});
  cols.push_back({Col::U, 0, "u", BigInt(q) * q - 1, p});
  for (long l = 1; l <= (q - 1) / 2; ++l) {
    BigInt size = BigInt(q) * (q + 1);
    if (l == (q - 1) / 2) size /= 2;  // diag(-1, 1), the split involution
    cols.push_back({Col::A, l, lbl("d", l), size, (q - 1) / std::gcd(l, q - 1)});
  }
  for (long m = 1; m <= (q + 1) / 2; ++m) {
    BigInt size = BigInt(q) * (q - 1);
    if (m == (q + 1) / 2) size /= 2;  // the nonsplit involution
    cols.push_back({Col::B, m, lbl("e", m), size, (q + 1) / std::gcd(m, q + 1)});
  }

  auto sgn = [](long i) { return i % 2 == 0 ? 1 : -1; };

  std::vector<std::function<CycloNum(const Col&)>> rows;
  rows.push_back([](const Col&) { return CycloNum(1); });
  rows.push_back([sgn](const Col& c) {  // the nonsquare-determinant sign
    switch (c.kind) {
      case Col::ID:
      case Col::U: return CycloNum(1);
      default: return CycloNum(sgn(c.par));
    }
  });
  rows.push_back([q](const Col& c) {  // Steinberg
    switch (c.kind) {
      case Col::ID: return CycloNum(q);
      case Col::U: return CycloNum(0);
      case Col::A: return CycloNum(1);
      default: return CycloNum(-1);
    }
  });
  rows.push_back([q, sgn](const Col& c) {  // sign times Steinberg
    switch (c.kind) {
      case Col::ID: return CycloNum(q);
      case Col::U: return CycloNum(0);
      case Col::A: return CycloNum(sgn(c.par));
      default: return CycloNum(-sgn(c.par));
    }
  });
  for (long i = 1; i <= (q - 3) / 2; ++i)
    rows.push_back([q, i](const Col& c) {
      switch (c.kind) {
        case Col::ID: return CycloNum(q + 1);
        case Col::U: return CycloNum(1);
        case Col::A: return zeta_sum(q - 1, i * c.par);
        default: return CycloNum(0);
      }
    });
  for (long j = 1; j <= (q - 1) / 2; ++j)
    rows.push_back([q, j](const Col& c) {
      switch (c.kind) {
        case Col::ID: return CycloNum(q - 1);
        case Col::U: return CycloNum(-1);
        case Col::A: return CycloNum(0);
        default: return -zeta_sum(q + 1, j * c.par);
      }
    });
  return assemble(name, order, cols, rows);
}

}  // namespace

CharacterTable generic_table(const Descriptor& d) {
  if (d.kind != "sl2" && d.kind != "psl2" && d.kind != "pgl2")
    throw UsageError("generic_table: descriptor kind must be sl2, psl2 or pgl2");
  if (d.q < 4) throw UsageError("generic_table: q must be at least 4");
  auto fac = factorize(BigInt(d.q));
  if (fac.size() != 1) throw UsageError("generic_table: q is not a prime power");
  long p = fac[0].first.get_si();
  long f = fac[0].second;
  long q = d.q;

  if (q % 2 == 0) return sl2_table_even(d.name(), q);  // the three kinds coincide
  if (d.kind == "sl2") return sl2_table_odd(d.name(), q, p, f);
  if (d.kind == "psl2") return psl2_table_odd(d.name(), q, p, f);
  return pgl2_table_odd(d.name(), q, p);
}

CharacterTable generic_table(const std::string& descriptor) {
  return generic_table(parse_descriptor(descriptor));
}

}  // namespace covkit
