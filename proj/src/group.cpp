#include "covkit/group.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <functional>
#include <numeric>
#include <sstream>

#include "covkit/numtheory.hpp"
#include "covkit/perm.hpp"

namespace covkit {

namespace {

constexpr int kMaxWidth = 16;

std::uint64_t hash_row(const std::int16_t* r, int w) {
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < w; ++i) {
    h ^= (std::uint16_t)r[i];
    h *= 1099511628211ull;
  }
  // Final mix so linear probing is well spread even for tiny widths.
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return h;
}

bool row_eq(const std::int16_t* a, const std::int16_t* b, int w) {
  return std::memcmp(a, b, sizeof(std::int16_t) * (std::size_t)w) == 0;
}

bool row_less(const std::int16_t* a, const std::int16_t* b, int w) {
  for (int i = 0; i < w; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// Append-only set of fixed-width rows with open-addressing lookup; used for
// deduplicating coset representatives and for closure searches.
class RowSet {
 public:
  RowSet(int width, std::size_t expect) : w_(width) {
    std::size_t cap = 16;
    while (cap < 2 * expect + 2) cap <<= 1;
    slots_.assign(cap, -1);
    mask_ = cap - 1;
  }

  int width() const { return w_; }
  std::int32_t size() const { return count_; }
  const std::int16_t* row(std::int32_t i) const { return rows_.data() + (std::size_t)i * (std::size_t)w_; }

  // Returns the index of the row, inserting it if new; was_new reports which.
  std::int32_t insert(const std::int16_t* r, bool& was_new) {
    if ((std::size_t)count_ * 2 + 2 > slots_.size()) grow();
    std::size_t pos = hash_row(r, w_) & mask_;
    while (slots_[pos] >= 0) {
      if (row_eq(row(slots_[pos]), r, w_)) {
        was_new = false;
        return slots_[pos];
      }
      pos = (pos + 1) & mask_;
    }
    rows_.insert(rows_.end(), r, r + w_);
    slots_[pos] = count_;
    was_new = true;
    return count_++;
  }

  std::vector<std::int16_t> take_rows() { return std::move(rows_); }

 private:
  void grow() {
    std::size_t cap = slots_.size() * 2;
    std::vector<std::int32_t> fresh(cap, -1);
    std::size_t m = cap - 1;
    for (std::int32_t i = 0; i < count_; ++i) {
      std::size_t pos = hash_row(row(i), w_) & m;
      while (fresh[pos] >= 0) pos = (pos + 1) & m;
      fresh[pos] = i;
    }
    slots_ = std::move(fresh);
    mask_ = m;
  }

  int w_;
  std::vector<std::int16_t> rows_;
  std::vector<std::int32_t> slots_;
  std::size_t mask_ = 0;
  std::int32_t count_ = 0;
};

struct PrimePower {
  long p = 0;
  int f = 0;
};

PrimePower as_prime_power(long q) {
  if (q < 2) throw UsageError("group descriptor: q must be a prime power >= 2");
  auto fs = factorize(q);
  if (fs.size() != 1)
    throw UsageError("group descriptor: q = " + std::to_string(q) + " is not a prime power");
  return {(long)fs[0].first.get_si(), fs[0].second};
}

bool is_matrix_kind(const std::string& k) {
  return k == "sl2" || k == "psl2" || k == "gl2" || k == "pgl2" || k == "sl3" ||
         k == "psl3" || k == "su3" || k == "psu3";
}

bool is_perm_kind(const std::string& k) { return k == "alt" || k == "sym"; }

// --- raw matrix helpers over a field table ---

void mat_mult(const Fq& F, int d, const std::int16_t* a, const std::int16_t* b, std::int16_t* out) {
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      int acc = 0;
      for (int k = 0; k < d; ++k) acc = F.add(acc, F.mul(a[i * d + k], b[k * d + j]));
      out[i * d + j] = (std::int16_t)acc;
    }
}

int mat_det(const Fq& F, int d, const std::int16_t* m) {
  if (d == 2) return F.sub(F.mul(m[0], m[3]), F.mul(m[1], m[2]));
  int t0 = F.mul(m[0], F.sub(F.mul(m[4], m[8]), F.mul(m[5], m[7])));
  int t1 = F.mul(m[1], F.sub(F.mul(m[3], m[8]), F.mul(m[5], m[6])));
  int t2 = F.mul(m[2], F.sub(F.mul(m[3], m[7]), F.mul(m[4], m[6])));
  return F.add(F.sub(t0, t1), t2);
}

void mat_inv(const Fq& F, int d, const std::int16_t* m, std::int16_t* out) {
  int det = mat_det(F, d, m);
  int di = F.inv(det);
  if (d == 2) {
    out[0] = (std::int16_t)F.mul(di, m[3]);
    out[1] = (std::int16_t)F.mul(di, F.neg(m[1]));
    out[2] = (std::int16_t)F.mul(di, F.neg(m[2]));
    out[3] = (std::int16_t)F.mul(di, m[0]);
    return;
  }
  auto mm = [&](int i, int j) { return m[i * 3 + j]; };
  // Adjugate transpose: out[j][i] = cofactor(i,j).
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      int cof = F.sub(F.mul(mm(r0, c0), mm(r1, c1)), F.mul(mm(r0, c1), mm(r1, c0)));
      out[j * 3 + i] = (std::int16_t)F.mul(di, cof);
    }
}

}  // namespace

std::string Descriptor::name() const {
  if (kind == "alt" || kind == "sym") return kind + ":n=" + std::to_string(n);
  if (kind == "ingested") return kind;
  return kind + ":q=" + std::to_string(q);
}

Descriptor parse_descriptor(const std::string& text) {
  Descriptor d;
  auto colon = text.find(':');
  d.kind = text.substr(0, colon);
  if (d.kind == "ingested") {
    if (colon != std::string::npos) throw UsageError("descriptor 'ingested' takes no parameters");
    return d;
  }
  if (!is_matrix_kind(d.kind) && !is_perm_kind(d.kind))
    throw UsageError("unknown group kind '" + d.kind + "'");
  if (colon == std::string::npos)
    throw UsageError("descriptor '" + text + "' is missing its parameter");
  std::string param = text.substr(colon + 1);
  auto eq = param.find('=');
  if (eq == std::string::npos) throw UsageError("descriptor parameter must look like q=7 or n=8");
  std::string key = param.substr(0, eq), val = param.substr(eq + 1);
  long v = 0;
  try {
    std::size_t used = 0;
    v = std::stol(val, &used);
    if (used != val.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw UsageError("descriptor parameter value '" + val + "' is not an integer");
  }
  if (is_matrix_kind(d.kind)) {
    if (key != "q") throw UsageError("matrix group descriptors take q=<prime power>");
    d.q = v;
    as_prime_power(v);  // validates
  } else {
    if (key != "n") throw UsageError("permutation group descriptors take n=<degree>");
    if (v < 1) throw UsageError("permutation degree must be at least 1");
    if (v > kMaxWidth) throw UsageError("permutation degree above 16 is not supported");
    d.n = v;
  }
  return d;
}

const Fq& Group::field() const {
  if (!F_) throw UsageError("group '" + name() + "' has no ambient field");
  return *F_;
}

void Group::raw_mult(const std::int16_t* a, const std::int16_t* b, std::int16_t* out) const {
  if (dim_) {
    mat_mult(*F_, dim_, a, b, out);
  } else {
    for (int i = 0; i < w_; ++i) out[i] = a[b[i]];
  }
}

void Group::raw_inv(const std::int16_t* a, std::int16_t* out) const {
  if (dim_) {
    mat_inv(*F_, dim_, a, out);
  } else {
    for (int i = 0; i < w_; ++i) out[a[i]] = (std::int16_t)i;
  }
}

void Group::canon_coset(std::int16_t* m) const {
  if (desc_.kind == "pgl2") {
    // Scale so the first nonzero entry becomes one; unique in the coset.
    for (int i = 0; i < w_; ++i) {
      if (m[i] != 0) {
        if (m[i] != 1) {
          int s = F_->inv(m[i]);
          for (int j = i; j < w_; ++j) m[j] = (std::int16_t)F_->mul(s, m[j]);
        }
        return;
      }
    }
    return;
  }
  if (center_.size() <= 1) return;
  std::int16_t best[kMaxWidth], cand[kMaxWidth];
  std::memcpy(best, m, sizeof(std::int16_t) * (std::size_t)w_);
  for (std::size_t ci = 1; ci < center_.size(); ++ci) {
    int lam = center_[ci];
    for (int i = 0; i < w_; ++i) cand[i] = (std::int16_t)F_->mul(lam, m[i]);
    if (row_less(cand, best, w_)) std::memcpy(best, cand, sizeof(std::int16_t) * (std::size_t)w_);
  }
  std::memcpy(m, best, sizeof(std::int16_t) * (std::size_t)w_);
}

int Group::find_raw(const std::int16_t* row) const {
  std::size_t pos = hash_row(row, w_) & mask_;
  while (slots_[pos] >= 0) {
    if (row_eq(raw(slots_[pos]), row, w_)) return slots_[pos];
    pos = (pos + 1) & mask_;
  }
  return -1;
}

int Group::locate(const std::int16_t* row) const {
  std::int16_t tmp[kMaxWidth];
  std::memcpy(tmp, row, sizeof(std::int16_t) * (std::size_t)w_);
  canon_coset(tmp);
  int r = find_raw(tmp);
  if (r < 0) throw UsageError("group '" + name() + "': element not in the group");
  return r;
}

int Group::mult(int a, int b) const {
  std::int16_t tmp[kMaxWidth];
  raw_mult(raw(a), raw(b), tmp);
  canon_coset(tmp);
  int r = find_raw(tmp);
  if (r < 0) throw MathError("group '" + name() + "': product left the enumerated set");
  return r;
}

int Group::inv(int a) const {
  std::int16_t tmp[kMaxWidth];
  raw_inv(raw(a), tmp);
  canon_coset(tmp);
  int r = find_raw(tmp);
  if (r < 0) throw MathError("group '" + name() + "': inverse left the enumerated set");
  return r;
}

long Group::element_order(int a) const {
  long ord = 1;
  int x = a;
  while (x != id_) {
    x = mult(x, a);
    ++ord;
    if (ord > order_) throw MathError("group '" + name() + "': order loop failed to reach identity");
  }
  return ord;
}

std::vector<int> Group::class_elements(int c) const {
  if (c < 0 || c >= (int)classes_.size()) throw UsageError("class index out of range");
  std::vector<int> out;
  out.reserve((std::size_t)classes_[(std::size_t)c].size);
  for (long i = 0; i < order_; ++i)
    if (class_of_[(std::size_t)i] == c) out.push_back((int)i);
  return out;
}

long Group::centralizer_order(int a) const {
  long count = 0;
  for (long x = 0; x < order_; ++x)
    if (mult((int)x, a) == mult(a, (int)x)) ++count;
  return count;
}

std::string Group::element_str(int a) const {
  const std::int16_t* r = raw(a);
  if (!dim_) {
    Perm p;
    p.img.assign(r, r + w_);
    return perm_cycles_str(p);
  }
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < dim_; ++i) {
    out << (i ? ",[" : "[");
    for (int j = 0; j < dim_; ++j) out << (j ? "," : "") << r[i * dim_ + j];
    out << ']';
  }
  out << ']';
  return out.str();
}

void Group::build_index() {
  std::size_t cap = 16;
  while (cap < (std::size_t)order_ * 2 + 2) cap <<= 1;
  slots_.assign(cap, -1);
  mask_ = cap - 1;
  for (long i = 0; i < order_; ++i) {
    std::size_t pos = hash_row(raw((int)i), w_) & mask_;
    while (slots_[pos] >= 0) pos = (pos + 1) & mask_;
    slots_[pos] = (std::int32_t)i;
  }
}

void Group::find_generators(const std::vector<int>& candidates) {
  std::vector<char> visited;
  auto closure_size = [&]() {
    visited.assign((std::size_t)order_, 0);
    std::vector<std::int32_t> queue;
    visited[(std::size_t)id_] = 1;
    queue.push_back(id_);
    std::size_t head = 0;
    while (head < queue.size()) {
      int x = queue[head++];
      for (int g : gens_) {
        int y = mult(x, g);
        if (!visited[(std::size_t)y]) {
          visited[(std::size_t)y] = 1;
          queue.push_back(y);
        }
      }
    }
    return (long)queue.size();
  };
  gens_.clear();
  long cur = closure_size();
  while (cur < order_) {
    int add = -1;
    for (int c : candidates) {
      if (!visited[(std::size_t)c]) {
        add = c;
        break;
      }
    }
    if (add < 0)
      throw MathError("group '" + name() + "': generator candidates span only " +
                      std::to_string(cur) + " of " + std::to_string(order_) + " elements");
    gens_.push_back(add);
    cur = closure_size();
  }
  gen_invs_.clear();
  for (int g : gens_) gen_invs_.push_back(inv(g));
}

void Group::compute_classes() {
  class_of_.assign((std::size_t)order_, -1);
  classes_.clear();
  std::vector<std::int32_t> queue;
  for (long i = 0; i < order_; ++i) {
    if (class_of_[(std::size_t)i] >= 0) continue;
    int c = (int)classes_.size();
    class_of_[(std::size_t)i] = c;
    queue.clear();
    queue.push_back((std::int32_t)i);
    std::size_t head = 0;
    long size = 1;
    while (head < queue.size()) {
      int x = queue[head++];
      for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
        int y = mult(mult(gens_[gi], x), gen_invs_[gi]);
        if (class_of_[(std::size_t)y] < 0) {
          class_of_[(std::size_t)y] = c;
          queue.push_back(y);
          ++size;
        }
      }
    }
    ConjClass cc;
    cc.index = c;
    cc.rep = (int)i;
    cc.size = size;
    cc.element_order = element_order((int)i);
    classes_.push_back(cc);
  }
  std::vector<int> order_idx((std::size_t)classes_.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    const ConjClass& x = classes_[(std::size_t)a];
    const ConjClass& y = classes_[(std::size_t)b];
    if (x.element_order != y.element_order) return x.element_order < y.element_order;
    if (x.size != y.size) return x.size < y.size;
    return x.rep < y.rep;
  });
  std::vector<int> newpos((std::size_t)classes_.size());
  for (std::size_t k = 0; k < order_idx.size(); ++k) newpos[(std::size_t)order_idx[k]] = (int)k;
  std::vector<ConjClass> sorted((std::size_t)classes_.size());
  for (std::size_t k = 0; k < order_idx.size(); ++k) {
    sorted[k] = classes_[(std::size_t)order_idx[k]];
    sorted[k].index = (int)k;
  }
  classes_ = std::move(sorted);
  for (auto& c : class_of_) c = newpos[(std::size_t)c];
}

Group Group::build(const std::string& descriptor, long budget) {
  return build(parse_descriptor(descriptor), budget);
}

Group Group::build(const Descriptor& d, long budget) {
  Group G;
  G.desc_ = d;
  const std::string& k = d.kind;
  if (k == "ingested")
    throw UsageError("descriptor 'ingested' denotes table-only data and cannot be enumerated");
  if (!is_matrix_kind(k) && !is_perm_kind(k)) throw UsageError("unknown group kind '" + k + "'");

  BigInt formula;
  if (is_matrix_kind(k)) {
    auto pp = as_prime_power(d.q);
    BigInt q = d.q;
    if (k == "sl2" || k == "psl2") {
      formula = q * (q - 1) * (q + 1);
      if (k == "psl2") formula /= gcd(BigInt(2), q - 1);
    } else if (k == "gl2" || k == "pgl2") {
      formula = (q * q - 1) * (q * q - q);
      if (k == "pgl2") formula /= q - 1;
    } else if (k == "sl3" || k == "psl3") {
      formula = ipow(q, 3) * (ipow(q, 3) - 1) * (q * q - 1);
      if (k == "psl3") formula /= gcd(BigInt(3), q - 1);
    } else {
      formula = ipow(q, 3) * (q * q - 1) * (ipow(q, 3) + 1);
      if (k == "psu3") formula /= gcd(BigInt(3), q + 1);
    }
    if (formula > budget)
      throw MathError("group '" + d.name() + "' has order " + to_string(formula) +
                      ", above the enumeration budget " + std::to_string(budget));
    G.order_ = formula.get_si();
    bool unitary = (k == "su3" || k == "psu3");
    G.F_ = &fq_make(pp.p, unitary ? 2 * pp.f : pp.f);
    G.frob_ = unitary ? pp.f : 0;
    G.dim_ = (k == "sl2" || k == "psl2" || k == "gl2" || k == "pgl2") ? 2 : 3;
    G.w_ = G.dim_ * G.dim_;
  } else {
    if (d.n < 1) throw UsageError("permutation degree must be at least 1");
    if (d.n > kMaxWidth) throw UsageError("permutation degree above 16 is not supported");
    BigInt fact = 1;
    for (long i = 2; i <= d.n; ++i) fact *= i;
    formula = (k == "alt" && d.n >= 2) ? fact / 2 : fact;
    if (formula > budget)
      throw MathError("group '" + d.name() + "' has order " + to_string(formula) +
                      ", above the enumeration budget " + std::to_string(budget));
    G.order_ = formula.get_si();
    G.dim_ = 0;
    G.w_ = (int)d.n;
  }

  const Fq* F = G.F_;
  int w = G.w_;

  // Central scalars to canonicalize over (quotient kinds only). pgl2 uses
  // projective normalization instead of a scalar list.
  if (k == "psl2") {
    int minus1 = F->neg(1);
    G.center_ = {1};
    if (minus1 != 1) G.center_.push_back(minus1);
  } else if (k == "psl3" || k == "psu3") {
    G.center_ = {1};
    for (int x = 2; x < (int)F->q(); ++x)
      if (F->mul(x, F->mul(x, x)) == 1 &&
          (k == "psl3" || F->mul(x, F->pow_frobenius(x, G.frob_)) == 1))
        G.center_.push_back(x);
  }

  // --- enumeration ---
  std::vector<std::int16_t> rows;
  auto push_row = [&](const std::int16_t* r) { rows.insert(rows.end(), r, r + w); };

  if (k == "sl2" || k == "psl2") {
    int Q = (int)F->q();
    std::int16_t m[4];
    RowSet dedupe(w, (std::size_t)G.order_);
    bool fresh = false;
    auto emit = [&](int a, int b, int c, int dd) {
      m[0] = (std::int16_t)a;
      m[1] = (std::int16_t)b;
      m[2] = (std::int16_t)c;
      m[3] = (std::int16_t)dd;
      if (k == "psl2") {
        G.canon_coset(m);
        dedupe.insert(m, fresh);
      } else {
        push_row(m);
      }
    };
    for (int a = 1; a < Q; ++a) {
      int ai = F->inv(a);
      for (int b = 0; b < Q; ++b)
        for (int c = 0; c < Q; ++c) emit(a, b, c, F->mul(ai, F->add(1, F->mul(b, c))));
    }
    for (int b = 1; b < Q; ++b) {
      int c = F->neg(F->inv(b));
      for (int dd = 0; dd < Q; ++dd) emit(0, b, c, dd);
    }
    if (k == "psl2") rows = dedupe.take_rows();
  } else if (k == "gl2") {
    int Q = (int)F->q();
    std::int16_t m[4];
    for (int a = 0; a < Q; ++a)
      for (int b = 0; b < Q; ++b)
        for (int c = 0; c < Q; ++c)
          for (int dd = 0; dd < Q; ++dd) {
            if (F->sub(F->mul(a, dd), F->mul(b, c)) == 0) continue;
            m[0] = (std::int16_t)a;
            m[1] = (std::int16_t)b;
            m[2] = (std::int16_t)c;
            m[3] = (std::int16_t)dd;
            push_row(m);
          }
  } else if (k == "pgl2") {
    // Normalized representatives directly: first nonzero entry equals one.
    int Q = (int)F->q();
    std::int16_t m[4];
    for (int b = 0; b < Q; ++b)
      for (int c = 0; c < Q; ++c)
        for (int dd = 0; dd < Q; ++dd) {
          if (F->sub(dd, F->mul(b, c)) == 0) continue;
          m[0] = 1;
          m[1] = (std::int16_t)b;
          m[2] = (std::int16_t)c;
          m[3] = (std::int16_t)dd;
          push_row(m);
        }
    for (int c = 1; c < Q; ++c)
      for (int dd = 0; dd < Q; ++dd) {
        m[0] = 0;
        m[1] = 1;
        m[2] = (std::int16_t)c;
        m[3] = (std::int16_t)dd;
        push_row(m);
      }
  } else if (k == "sl3" || k == "psl3") {
    int Q = (int)F->q();
    long nrows = (long)Q * Q * Q;
    std::vector<std::array<std::int16_t, 3>> rv((std::size_t)nrows);
    for (long t = 0; t < nrows; ++t)
      rv[(std::size_t)t] = {(std::int16_t)(t % Q), (std::int16_t)((t / Q) % Q),
                            (std::int16_t)(t / (Q * Q))};
    RowSet dedupe(w, (std::size_t)G.order_);
    bool fresh = false;
    std::int16_t m[9];
    for (const auto& r0 : rv)
      for (const auto& r1 : rv) {
        // 2x2 minors of the first two rows, by excluded column.
        int m0 = F->sub(F->mul(r0[1], r1[2]), F->mul(r0[2], r1[1]));
        int m1 = F->sub(F->mul(r0[0], r1[2]), F->mul(r0[2], r1[0]));
        int m2 = F->sub(F->mul(r0[0], r1[1]), F->mul(r0[1], r1[0]));
        if (m0 == 0 && m1 == 0 && m2 == 0) continue;  // rank < 2 already
        for (const auto& r2 : rv) {
          int det = F->add(F->sub(F->mul(r2[0], m0), F->mul(r2[1], m1)), F->mul(r2[2], m2));
          if (det != 1) continue;
          m[0] = r0[0]; m[1] = r0[1]; m[2] = r0[2];
          m[3] = r1[0]; m[4] = r1[1]; m[5] = r1[2];
          m[6] = r2[0]; m[7] = r2[1]; m[8] = r2[2];
          if (k == "psl3") {
            G.canon_coset(m);
            dedupe.insert(m, fresh);
          } else {
            push_row(m);
          }
        }
      }
    if (k == "psl3") rows = dedupe.take_rows();
  } else if (k == "su3" || k == "psu3") {
    int Q = (int)F->q();
    auto conj = [&](int x) { return F->pow_frobenius(x, G.frob_); };
    auto hermitian_ok = [&](const std::int16_t* m) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          int acc = 0;
          for (int kk = 0; kk < 3; ++kk)
            acc = F->add(acc, F->mul(conj(m[kk * 3 + i]), m[(2 - kk) * 3 + j]));
          if (acc != (i + j == 2 ? 1 : 0)) return false;
        }
      return true;
    };
    // Seed: all unitriangular members (both shapes) and all monomial members.
    std::vector<std::int16_t> seed;
    std::int16_t m[9];
    auto add_seed = [&](const std::int16_t* r) { seed.insert(seed.end(), r, r + 9); };
    for (int a = 0; a < Q; ++a)
      for (int b = 0; b < Q; ++b)
        for (int c = 0; c < Q; ++c) {
          std::int16_t up[9] = {1, (std::int16_t)a, (std::int16_t)b,
                                0, 1,               (std::int16_t)c,
                                0, 0,               1};
          if (hermitian_ok(up)) add_seed(up);
          std::int16_t lo[9] = {1,               0,               0,
                                (std::int16_t)a, 1,               0,
                                (std::int16_t)b, (std::int16_t)c, 1};
          if (hermitian_ok(lo)) add_seed(lo);
        }
    constexpr int perms3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& sigma : perms3)
      for (int v0 = 1; v0 < Q; ++v0)
        for (int v1 = 1; v1 < Q; ++v1)
          for (int v2 = 1; v2 < Q; ++v2) {
            std::memset(m, 0, sizeof(m));
            m[0 * 3 + sigma[0]] = (std::int16_t)v0;
            m[1 * 3 + sigma[1]] = (std::int16_t)v1;
            m[2 * 3 + sigma[2]] = (std::int16_t)v2;
            if (mat_det(*F, 3, m) == 1 && hermitian_ok(m)) add_seed(m);
          }
    long nseed = (long)(seed.size() / 9);
    // Closure under right multiplication, attempted first with a tiny prefix
    // of the seed (one of each shape), then with everything.
    long ambient = G.order_;
    if (k == "psu3") {
      BigInt q = d.q;
      BigInt amb = ipow(q, 3) * (q * q - 1) * (ipow(q, 3) + 1);
      ambient = amb.get_si();
    }
    // First attempt uses one seed of each shape: a strict upper, a strict
    // lower, and a monomial with permuted support.
    std::vector<long> tries;
    {
      long first_up = -1, first_lo = -1, first_mono = -1;
      for (long i = 0; i < nseed; ++i) {
        const std::int16_t* s = seed.data() + 9 * i;
        bool diag = s[1] == 0 && s[2] == 0 && s[3] == 0 && s[5] == 0 && s[6] == 0 && s[7] == 0;
        if (diag) continue;
        bool upper = s[3] == 0 && s[6] == 0 && s[7] == 0;
        bool lower = s[1] == 0 && s[2] == 0 && s[5] == 0;
        if (upper && first_up < 0) first_up = i;
        else if (lower && first_lo < 0) first_lo = i;
        else if (!upper && !lower && first_mono < 0) first_mono = i;
      }
      for (long t : {first_up, first_lo, first_mono})
        if (t >= 0) tries.push_back(t);
    }
    for (int attempt = 0; attempt < 2; ++attempt) {
      RowSet closure(9, (std::size_t)ambient);
      bool fresh = false;
      std::int16_t ident[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
      closure.insert(ident, fresh);
      std::vector<long> use;
      if (attempt == 0)
        use = tries;
      else
        for (long i = 0; i < nseed; ++i) use.push_back(i);
      for (long i : use) closure.insert(seed.data() + 9 * i, fresh);
      std::int32_t head = 0;
      while (head < closure.size()) {
        for (long i : use) {
          mat_mult(*F, 3, closure.row(head), seed.data() + 9 * i, m);
          closure.insert(m, fresh);
        }
        ++head;
      }
      if ((long)closure.size() == ambient) {
        rows = closure.take_rows();
        break;
      }
      if (attempt == 1)
        throw MathError("group '" + d.name() + "': seed closure reached " +
                        std::to_string(closure.size()) + " of " + std::to_string(ambient) +
                        " elements");
    }
    if (k == "psu3" && G.center_.size() > 1) {
      RowSet dedupe(9, (std::size_t)G.order_);
      bool fresh = false;
      for (long i = 0; i < ambient; ++i) {
        std::memcpy(m, rows.data() + 9 * i, sizeof(m));
        G.canon_coset(m);
        dedupe.insert(m, fresh);
      }
      rows = dedupe.take_rows();
    }
  } else {
    // alt / sym: all permutations in lexicographic order, filtered by parity.
    std::vector<std::int16_t> img((std::size_t)d.n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<char> seen((std::size_t)d.n);
    do {
      if (k == "alt") {
        std::fill(seen.begin(), seen.end(), 0);
        int swaps = 0;
        for (int x = 0; x < d.n; ++x) {
          if (seen[(std::size_t)x]) continue;
          int y = x, len = 0;
          while (!seen[(std::size_t)y]) {
            seen[(std::size_t)y] = 1;
            y = img[(std::size_t)y];
            ++len;
          }
          swaps += len - 1;
        }
        if (swaps % 2) continue;
      }
      push_row(img.data());
    } while (std::next_permutation(img.begin(), img.end()));
  }

  long count = (long)(rows.size() / (std::size_t)w);
  if (count != G.order_)
    throw MathError("group '" + d.name() + "': enumerated " + std::to_string(count) +
                    " elements but the order formula gives " + std::to_string(G.order_));

  // Sort rows so indices are the lexicographic ranks.
  {
    std::vector<std::int32_t> idx((std::size_t)count);
    std::iota(idx.begin(), idx.end(), 0);
    const std::int16_t* base = rows.data();
    std::sort(idx.begin(), idx.end(), [&](std::int32_t a, std::int32_t b) {
      return row_less(base + (std::size_t)a * (std::size_t)w, base + (std::size_t)b * (std::size_t)w, w);
    });
    G.flat_.resize(rows.size());
    for (long i = 0; i < count; ++i)
      std::memcpy(G.flat_.data() + (std::size_t)i * (std::size_t)w,
                  base + (std::size_t)idx[(std::size_t)i] * (std::size_t)w,
                  sizeof(std::int16_t) * (std::size_t)w);
  }
  G.build_index();

  // Identity index.
  {
    std::int16_t ident[kMaxWidth] = {0};
    if (G.dim_) {
      for (int i = 0; i < G.dim_; ++i) ident[i * G.dim_ + i] = 1;
    } else {
      for (int i = 0; i < w; ++i) ident[i] = (std::int16_t)i;
    }
    G.canon_coset(ident);
    G.id_ = G.find_raw(ident);
    if (G.id_ < 0) throw MathError("group '" + d.name() + "': identity not found");
  }

  // Generating-set candidates, then the greedy verified chain.
  std::vector<int> candidates;
  auto add_candidate_row = [&](std::int16_t* r) {
    G.canon_coset(r);
    int idx = G.find_raw(r);
    if (idx < 0) throw MathError("group '" + d.name() + "': candidate generator not found");
    candidates.push_back(idx);
  };
  if (G.dim_ == 2) {
    int nu = F->primitive_element();
    std::int16_t m[4];
    int e = 1;
    int f_deg = as_prime_power(d.q).f;
    for (int i = 0; i < f_deg; ++i) {
      m[0] = 1; m[1] = (std::int16_t)e; m[2] = 0; m[3] = 1;
      add_candidate_row(m);
      m[0] = 1; m[1] = 0; m[2] = (std::int16_t)e; m[3] = 1;
      add_candidate_row(m);
      e = F->mul(e, nu);
    }
    if (k == "gl2" || k == "pgl2") {
      m[0] = (std::int16_t)nu; m[1] = 0; m[2] = 0; m[3] = 1;
      add_candidate_row(m);
    }
  } else if (G.dim_ == 3 && (k == "sl3" || k == "psl3")) {
    int nu = F->primitive_element();
    auto pp = as_prime_power(d.q);
    std::int16_t m[9];
    int e = 1;
    for (int i = 0; i < pp.f; ++i) {
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
          if (r == c) continue;
          std::memset(m, 0, sizeof(m));
          m[0] = m[4] = m[8] = 1;
          m[r * 3 + c] = (std::int16_t)e;
          add_candidate_row(m);
        }
      e = F->mul(e, nu);
    }
  } else if (G.dim_ == 3) {
    // su3 / psu3: every element counts as a candidate; the greedy chain keeps
    // only a couple. Scan in index order for determinism.
    for (long i = 0; i < G.order_; ++i) candidates.push_back((int)i);
  } else {
    auto add_perm = [&](const Perm& p) {
      std::int16_t m[kMaxWidth];
      for (int i = 0; i < w; ++i) m[i] = (std::int16_t)p.img[(std::size_t)i];
      add_candidate_row(m);
    };
    if (k == "sym" && d.n >= 2) {
      add_perm(perm_from_cycles((int)d.n, {{0, 1}}));
      std::vector<int> cyc;
      for (int i = 0; i < d.n; ++i) cyc.push_back(i);
      add_perm(perm_from_cycles((int)d.n, {cyc}));
    } else if (k == "alt" && d.n >= 3) {
      add_perm(perm_from_cycles((int)d.n, {{0, 1, 2}}));
      std::vector<int> cyc;
      if (d.n % 2 == 1)
        for (int i = 0; i < d.n; ++i) cyc.push_back(i);
      else
        for (int i = 1; i < d.n; ++i) cyc.push_back(i);
      if ((int)cyc.size() >= 3) add_perm(perm_from_cycles((int)d.n, {cyc}));
    }
  }
  G.find_generators(candidates);
  G.compute_classes();
  return G;
}

std::vector<AutOrbit> aut_fusion(const Group& G, AutAction action) {
  const auto& cls = G.classes();
  int k = (int)cls.size();
  std::vector<int> parent((std::size_t)k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) {
    while (parent[(std::size_t)x] != x) {
      parent[(std::size_t)x] = parent[(std::size_t)parent[(std::size_t)x]];
      x = parent[(std::size_t)x];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = root(a);
    b = root(b);
    if (a != b) parent[(std::size_t)std::max(a, b)] = std::min(a, b);
  };

  if (action == AutAction::PGL2OnPSL2) {
    if (G.descriptor().kind != "psl2")
      throw UsageError("fusion action PGL2-on-PSL2 applies only to psl2 groups");
    const Fq& F = G.field();
    int nu = F.primitive_element();
    int nuinv = F.inv(nu);
    for (const auto& c : cls) {
      const std::int16_t* r = G.raw(c.rep);
      std::int16_t img[4] = {r[0], (std::int16_t)F.mul(nu, r[1]), (std::int16_t)F.mul(nuinv, r[2]),
                             r[3]};
      int j = G.locate(img);
      unite(c.index, G.class_of(j));
    }
  } else if (action == AutAction::SnOnAn) {
    if (G.descriptor().kind != "alt")
      throw UsageError("fusion action Sn-on-An applies only to alt groups");
    int n = G.width();
    if (n >= 2) {
      auto swap01 = [](int x) { return x == 0 ? 1 : (x == 1 ? 0 : x); };
      for (const auto& c : cls) {
        const std::int16_t* r = G.raw(c.rep);
        std::int16_t img[kMaxWidth];
        for (int x = 0; x < n; ++x) img[(std::size_t)swap01(x)] = (std::int16_t)swap01(r[x]);
        int j = G.locate(img);
        unite(c.index, G.class_of(j));
      }
    }
  } else {
    // conjugation-only: nothing fuses
  }

  if (k == 0) return {};
  if (cls[0].element_order != 1)
    throw MathError("class sort lost the identity class");
  std::vector<AutOrbit> orbits;
  std::vector<int> where((std::size_t)k, -1);
  for (int c = 1; c < k; ++c) {
    int r = root(c);
    if (where[(std::size_t)r] < 0) {
      where[(std::size_t)r] = (int)orbits.size();
      orbits.push_back({});
    }
    orbits[(std::size_t)where[(std::size_t)r]].class_indices.push_back(c);
  }
  return orbits;
}

}  // namespace covkit
