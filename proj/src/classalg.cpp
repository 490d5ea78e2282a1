#include "covkit/classalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include "covkit/numtheory.hpp"

namespace covkit {

// ---------------------------------------------------------------------------
// NormalSubset

std::size_t NormalSubset::check(long c) const {
  if (c < 0 || c >= k())
    throw UsageError("NormalSubset: class index " + std::to_string(c) + " out of range [0," +
                     std::to_string(k()) + ")");
  return (std::size_t)c;
}

long NormalSubset::count() const {
  long c = 0;
  for (char f : member) c += (f != 0);
  return c;
}

bool NormalSubset::covers(const NormalSubset& sub) const {
  if (member.size() != sub.member.size()) throw UsageError("normal subset size mismatch");
  for (std::size_t i = 0; i < member.size(); ++i)
    if (sub.member[i] && !member[i]) return false;
  return true;
}

void NormalSubset::unite(const NormalSubset& o) {
  if (member.size() != o.member.size()) throw UsageError("normal subset size mismatch");
  for (std::size_t i = 0; i < member.size(); ++i)
    if (o.member[i]) member[i] = 1;
}

std::string NormalSubset::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t i = 0; i < member.size(); ++i)
    if (member[i]) {
      if (!first) os << ",";
      os << i;
      first = false;
    }
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------------------
// Frobenius counts and covers

static void check_indices(const CharacterTable& T, const std::vector<long>& cls, long t) {
  if (cls.empty()) throw UsageError("frob_count: need at least one class index");
  for (long c : cls)
    if (c < 0 || c >= T.k()) throw UsageError("frob_count: class index out of range");
  if (t < 0 || t >= T.k()) throw UsageError("frob_count: target index out of range");
}

// Scale factor |C_1|...|C_k| |C_t| / |G| as an exact rational.
static Rat frob_scale(const CharacterTable& T, const std::vector<long>& cls, long t) {
  BigInt num = T.classes[(std::size_t)t].size;
  for (long c : cls) num *= T.classes[(std::size_t)c].size;
  return ratio(num, T.order);
}

static FrobCount finish_count(const CycloNum& sum, const Rat& scale) {
  CycloNum value = sum * scale;
  if (!value.is_rational()) throw MathError("frob_count: non-rational count (corrupt table)");
  Rat v = value.rational_value();
  if (v.get_den() != 1) throw MathError("frob_count: non-integral count (corrupt table)");
  if (v < 0) throw MathError("frob_count: negative count (corrupt table)");
  BigInt n = v.get_num();
  return FrobCount{v, n};
}

FrobCount frob_count(const CharacterTable& T, const std::vector<long>& class_indices,
                     long target_index) {
  check_indices(T, class_indices, target_index);
  CycloNum sum(0);
  for (long r = 0; r < T.k(); ++r) {
    CycloNum prod = T.value(r, class_indices[0]);
    for (std::size_t i = 1; i < class_indices.size(); ++i) {
      if (prod.is_zero()) break;
      prod *= T.value(r, class_indices[i]);
    }
    if (prod.is_zero()) continue;
    prod *= T.value(r, target_index).conj();
    BigInt dp = 1;
    BigInt deg = T.degree(r);
    for (std::size_t i = 1; i < class_indices.size(); ++i) dp *= deg;
    sum += prod / Rat(dp);
  }
  return finish_count(sum, frob_scale(T, class_indices, target_index));
}

NormalSubset class_product_cover(const CharacterTable& T,
                                 const std::vector<long>& class_indices) {
  check_indices(T, class_indices, 0);
  long k = T.k();
  // Per character: the product over the input columns divided by
  // degree^{k-1}, computed once and reused for every target.
  std::vector<CycloNum> a((std::size_t)k);
  for (long r = 0; r < k; ++r) {
    CycloNum prod = T.value(r, class_indices[0]);
    for (std::size_t i = 1; i < class_indices.size(); ++i) {
      if (prod.is_zero()) break;
      prod *= T.value(r, class_indices[i]);
    }
    if (!prod.is_zero() && class_indices.size() > 1) {
      BigInt dp = 1;
      BigInt deg = T.degree(r);
      for (std::size_t i = 1; i < class_indices.size(); ++i) dp *= deg;
      prod = prod / Rat(dp);
    }
    a[(std::size_t)r] = prod;
  }
  BigInt base = 1;
  for (long c : class_indices) base *= T.classes[(std::size_t)c].size;
  NormalSubset out(k);
  for (long t = 0; t < k; ++t) {
    CycloNum acc(0);
    for (long r = 0; r < k; ++r) {
      if (a[(std::size_t)r].is_zero()) continue;
      acc += a[(std::size_t)r] * T.value(r, t).conj();
    }
    BigInt num = base * T.classes[(std::size_t)t].size;
    FrobCount fc = finish_count(acc, ratio(num, T.order));
    if (fc.positive()) out.add(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// CoverTensor

CoverTensor::CoverTensor(const CharacterTable& T) : T_(&T), k_(T.k()) {
  rows_.resize((std::size_t)(k_ * k_));
  done_.assign((std::size_t)(k_ * k_), 0);
}

const NormalSubset& CoverTensor::row(long i, long j) const {
  if (i < 0 || i >= k_ || j < 0 || j >= k_) throw UsageError("cover tensor index out of range");
  std::size_t at = (std::size_t)(i * k_ + j);
  if (!done_[at]) {
    rows_[at] = class_product_cover(*T_, {i, j});
    done_[at] = 1;
  }
  return rows_[at];
}

NormalSubset CoverTensor::fold(const NormalSubset& S, long j) const {
  if (S.k() != k_) throw UsageError("cover tensor fold: size mismatch");
  NormalSubset out(k_);
  for (long i = 0; i < k_; ++i)
    if (S.contains(i)) out.unite(row(i, j));
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration oracle

static NormalSubset brute_pair(const Group& G, long c2,
                               const std::vector<int>& c1_inverses) {
  const auto& cls = G.classes();
  NormalSubset out((long)cls.size());
  for (const auto& target : cls) {
    int g = target.rep;
    for (int xi : c1_inverses) {
      if (G.class_of(G.mult(xi, g)) == c2) {
        out.add(target.index);
        break;
      }
    }
  }
  return out;
}

NormalSubset brute_class_product(const Group& G, const std::vector<long>& class_indices) {
  const auto& cls = G.classes();
  long k = (long)cls.size();
  if (class_indices.empty()) throw UsageError("brute_class_product: need at least one class");
  for (long c : class_indices)
    if (c < 0 || c >= k) throw UsageError("brute_class_product: class index out of range");
  // Representative-based counting: each fold step scans, for every target
  // representative, the elements of every intermediate class, so one step
  // costs at most |G| * k lookups.
  BigInt cost = BigInt(G.order()) * BigInt(k) * BigInt((long)class_indices.size());
  if (cost > BigInt(2000000000))
    throw MathError("brute_class_product: enumeration budget exceeded");

  NormalSubset cur(k);
  cur.add(class_indices[0]);
  for (std::size_t step = 1; step < class_indices.size(); ++step) {
    long c2 = class_indices[step];
    NormalSubset next(k);
    for (long c1 = 0; c1 < k; ++c1) {
      if (!cur.contains(c1)) continue;
      std::vector<int> inv1;
      for (int x : G.class_elements((int)c1)) inv1.push_back(G.inv(x));
      next.unite(brute_pair(G, c2, inv1));
    }
    cur = next;
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Covering invariants

static std::vector<long> eligible_classes(const CharacterTable& T) {
  std::vector<long> out;
  for (long i = 0; i < T.k(); ++i)
    if (T.classes[(std::size_t)i].size > 1) out.push_back(i);
  return out;
}

static NormalSubset target_set(const CharacterTable& T, CoverTarget tgt) {
  NormalSubset s(T.k());
  for (long i = 0; i < T.k(); ++i)
    if (tgt == CoverTarget::AllElements || T.classes[(std::size_t)i].size > 1) s.add(i);
  return s;
}

CoverTarget default_cover_target(const CharacterTable& T) {
  long central = 0;
  for (long i = 0; i < T.k(); ++i)
    if (T.classes[(std::size_t)i].size == 1) ++central;
  return central > 1 ? CoverTarget::NonCentral : CoverTarget::AllElements;
}

// Once a prefix cover contains the target, further right-multiplication by
// an eligible class keeps it covered; valid when every eligible class is
// bigger than the set of central elements (always at desk scale). The
// search only prunes when that holds.
static bool absorption_valid(const CharacterTable& T, const std::vector<long>& elig) {
  BigInt central = 0;
  for (long i = 0; i < T.k(); ++i)
    if (T.classes[(std::size_t)i].size == 1) central += 1;
  for (long c : elig)
    if (!(T.classes[(std::size_t)c].size > central)) return false;
  return true;
}

static bool dfs_all_tuples(const CoverTensor& P, const std::vector<long>& elig,
                           const NormalSubset& need, long remaining, std::size_t min_pos,
                           const NormalSubset& S, bool prune) {
  if (prune && S.covers(need)) return true;
  if (remaining == 0) return S.covers(need);
  for (std::size_t p = min_pos; p < elig.size(); ++p)
    if (!dfs_all_tuples(P, elig, need, remaining - 1, p, P.fold(S, elig[p]), prune))
      return false;
  return true;
}

static bool all_tuples_cover(const CoverTensor& P, const std::vector<long>& elig,
                             const NormalSubset& need, long n, int threads, bool prune) {
  long k = P.table().k();
  auto start = [&](std::size_t p) {
    NormalSubset S(k);
    S.add(elig[p]);
    return dfs_all_tuples(P, elig, need, n - 1, p, S, prune);
  };
  if (threads <= 1 || elig.size() < 2) {
    for (std::size_t p = 0; p < elig.size(); ++p)
      if (!start(p)) return false;
    return true;
  }
  int nt = (int)std::min<std::size_t>((std::size_t)threads, elig.size());
  std::vector<char> ok((std::size_t)nt, 1);
  std::vector<std::thread> pool;
  for (int z = 0; z < nt; ++z)
    pool.emplace_back([&, z]() {
      for (std::size_t p = (std::size_t)z; p < elig.size(); p += (std::size_t)nt)
        if (!start(p)) {
          ok[(std::size_t)z] = 0;
          return;
        }
    });
  for (auto& th : pool) th.join();
  for (char f : ok)
    if (!f) return false;
  return true;
}

static void prefetch_rows(const CoverTensor& P, long k, const std::vector<long>& cols) {
  for (long i = 0; i < k; ++i)
    for (long j : cols) P.row(i, j);
}

long ecn(const CharacterTable& T, std::optional<CoverTarget> target, int threads) {
  CoverTensor P(T);
  std::vector<long> elig = eligible_classes(T);
  if (elig.empty()) throw MathError("ecn: no non-central classes");
  // Small classes fail first: search them first.
  std::sort(elig.begin(), elig.end(), [&](long a, long b) {
    const auto& A = T.classes[(std::size_t)a];
    const auto& B = T.classes[(std::size_t)b];
    if (A.size != B.size) return A.size < B.size;
    return a < b;
  });
  NormalSubset need = target_set(T, target.value_or(default_cover_target(T)));
  bool prune = absorption_valid(T, elig);
  prefetch_rows(P, T.k(), elig);
  for (long n = 1; n <= 64; ++n) {
    if (all_tuples_cover(P, elig, need, n, threads, prune)) {
      if (!all_tuples_cover(P, elig, need, n + 1, threads, prune))
        throw MathError("ecn: cover monotonicity violated (corrupt table)");
      return n;
    }
  }
  throw MathError("ecn: exceeded the depth cap of 64");
}

long cn(const CharacterTable& T, std::optional<CoverTarget> target) {
  CoverTensor P(T);
  std::vector<long> elig = eligible_classes(T);
  if (elig.empty()) throw MathError("cn: no non-central classes");
  NormalSubset need = target_set(T, target.value_or(default_cover_target(T)));
  std::vector<NormalSubset> pw;
  for (long c : elig) {
    NormalSubset s(T.k());
    s.add(c);
    pw.push_back(s);
  }
  for (long n = 1; n <= 64; ++n) {
    bool all = true;
    for (const auto& s : pw)
      if (!s.covers(need)) {
        all = false;
        break;
      }
    if (all) return n;
    for (std::size_t i = 0; i < pw.size(); ++i) pw[i] = P.fold(pw[i], elig[i]);
  }
  throw MathError("cn: exceeded the power cap of 64");
}

long iw(const CharacterTable& T) {
  long k = T.k();
  if (!(T.classes[0].size == 1 && T.classes[0].element_order == 1))
    throw MathError("iw: column 0 is not the identity class");
  std::vector<long> inv;
  for (long i = 0; i < k; ++i)
    if (T.classes[(std::size_t)i].element_order == 2) inv.push_back(i);
  if (inv.empty()) throw MathError("iw: the table has no involution classes");
  CoverTensor P(T);
  NormalSubset all(k);
  for (long i = 0; i < k; ++i) all.add(i);
  NormalSubset cur(k);
  cur.add(0);
  for (long j : inv) cur.add(j);
  for (long n = 1; n <= 64; ++n) {
    if (cur.covers(all)) return n;
    NormalSubset next = cur;  // identity in S keeps powers monotone
    for (long j : inv) next.unite(P.fold(cur, j));
    if (next == cur)
      throw MathError("iw: involution powers stabilized short of the group");
    cur = next;
  }
  throw MathError("iw: exceeded the power cap of 64");
}

long iw_brute(const Group& G) {
  long n = G.order();
  std::vector<int> invs;
  for (long g = 0; g < n; ++g)
    if (G.element_order((int)g) == 2) invs.push_back((int)g);
  if (invs.empty()) throw MathError("iw_brute: the group has no involutions");
  if (BigInt(n) * BigInt((long)invs.size()) > BigInt(100000000))
    throw MathError("iw_brute: enumeration budget exceeded");
  std::vector<char> cur((std::size_t)n, 0);
  cur[(std::size_t)G.identity()] = 1;
  for (int s : invs) cur[(std::size_t)s] = 1;
  long have = 1 + (long)invs.size();
  for (long m = 1; m <= 64; ++m) {
    if (have == n) return m;
    std::vector<char> next = cur;
    long added = 0;
    for (long g = 0; g < n; ++g) {
      if (!cur[(std::size_t)g]) continue;
      for (int s : invs) {
        int t = G.mult((int)g, s);
        if (!next[(std::size_t)t]) {
          next[(std::size_t)t] = 1;
          ++added;
        }
      }
    }
    if (added == 0) throw MathError("iw_brute: stabilized short of the group");
    have += added;
    cur = std::move(next);
  }
  throw MathError("iw_brute: exceeded the power cap of 64");
}

// ---------------------------------------------------------------------------
// Two-involution obstructions in alternating groups

static std::vector<long> parse_type_parts(const std::string& label) {
  std::vector<long> parts;
  if (label.size() < 2 || label.front() != '[' || label.back() != ']')
    throw UsageError("cycle-type label must look like [a,b,...]: " + label);
  std::string body = label.substr(1, label.size() - 2);
  std::istringstream is(body);
  std::string piece;
  while (std::getline(is, piece, ',')) {
    if (piece.empty()) throw UsageError("bad cycle-type label: " + label);
    parts.push_back(std::stol(piece));
  }
  if (parts.empty()) throw UsageError("bad cycle-type label: " + label);
  return parts;
}

std::vector<long> alt_two_involution_obstructions(const CharacterTable& snT) {
  BigInt fact = 1;
  long n = 0;
  while (fact < snT.order) {
    ++n;
    fact *= n;
  }
  if (fact != snT.order || n < 2)
    throw UsageError("alt_two_involution_obstructions: table order is not a factorial");

  std::vector<char> even((std::size_t)snT.k(), 0);
  for (long i = 0; i < snT.k(); ++i) {
    std::vector<long> parts = parse_type_parts(snT.classes[(std::size_t)i].label);
    long total = 0;
    for (long p : parts) total += p;
    if (total != n)
      throw UsageError("alt_two_involution_obstructions: label does not sum to the degree");
    even[(std::size_t)i] = ((n - (long)parts.size()) % 2 == 0) ? 1 : 0;
  }
  std::vector<long> inv;
  for (long i = 0; i < snT.k(); ++i)
    if (even[(std::size_t)i] && snT.classes[(std::size_t)i].element_order == 2) inv.push_back(i);

  std::vector<long> out;
  for (long t = 0; t < snT.k(); ++t) {
    if (!even[(std::size_t)t] || snT.classes[(std::size_t)t].element_order <= 2) continue;
    bool hit = false;
    for (std::size_t a = 0; a < inv.size() && !hit; ++a)
      for (std::size_t b = a; b < inv.size() && !hit; ++b)
        if (frob_count(snT, {inv[a], inv[b]}, t).positive()) hit = true;
    if (!hit) out.push_back(t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Characteristic covering certificates

static AutAction default_action(const Group& G) {
  const std::string& kind = G.descriptor().kind;
  if (kind == "psl2") return AutAction::PGL2OnPSL2;
  if (kind == "alt") return AutAction::SnOnAn;
  return AutAction::ConjugationOnly;
}

// DFS over orbit multisets; S is the cover of the prefix product.
static bool dfs_orbits(const CoverTensor& P, const std::vector<AutOrbit>& orbits,
                       const NormalSubset& need, long remaining, std::size_t min_pos,
                       const NormalSubset& S) {
  if (S.covers(need)) return true;  // orbit classes have size > 1 in a centerless group
  if (remaining == 0) return false;
  long k = P.table().k();
  for (std::size_t p = min_pos; p < orbits.size(); ++p) {
    NormalSubset S2(k);
    for (int c : orbits[p].class_indices) S2.unite(P.fold(S, (long)c));
    if (!dfs_orbits(P, orbits, need, remaining - 1, p, S2)) return false;
  }
  return true;
}

static bool cert_with(const CoverTensor& P, const std::vector<AutOrbit>& orbits, long n,
                      int threads) {
  long k = P.table().k();
  NormalSubset need(k);
  for (long i = 1; i < k; ++i) need.add(i);
  auto start = [&](std::size_t p) {
    NormalSubset S(k);
    for (int c : orbits[p].class_indices) S.add((long)c);
    return dfs_orbits(P, orbits, need, n - 1, p, S);
  };
  if (threads <= 1 || orbits.size() < 2) {
    for (std::size_t p = 0; p < orbits.size(); ++p)
      if (!start(p)) return false;
    return true;
  }
  int nt = (int)std::min<std::size_t>((std::size_t)threads, orbits.size());
  std::vector<char> ok((std::size_t)nt, 1);
  std::vector<std::thread> pool;
  for (int z = 0; z < nt; ++z)
    pool.emplace_back([&, z]() {
      for (std::size_t p = (std::size_t)z; p < orbits.size(); p += (std::size_t)nt)
        if (!start(p)) {
          ok[(std::size_t)z] = 0;
          return;
        }
    });
  for (auto& th : pool) th.join();
  for (char f : ok)
    if (!f) return false;
  return true;
}

static void require_centerless(const CharacterTable& T) {
  long central = 0;
  for (long i = 0; i < T.k(); ++i)
    if (T.classes[(std::size_t)i].size == 1) ++central;
  if (central != 1)
    throw UsageError("covering certificate requires a centerless group");
}

bool ccn_upper_cert(const Group& G, long n, std::optional<AutAction> action, int threads) {
  if (n < 1) throw UsageError("ccn_upper_cert: n must be positive");
  CharacterTable BT = brute_table(G);
  require_centerless(BT);
  std::vector<AutOrbit> orbits = aut_fusion(G, action.value_or(default_action(G)));
  CoverTensor P(BT);
  std::vector<long> cols;
  for (const auto& o : orbits)
    for (int c : o.class_indices) cols.push_back((long)c);
  prefetch_rows(P, BT.k(), cols);
  return cert_with(P, orbits, n, threads);
}

std::pair<long, long> ccn_bounds(const Group& G, std::optional<AutAction> action,
                                 int threads) {
  CharacterTable BT = brute_table(G);
  require_centerless(BT);
  std::vector<AutOrbit> orbits = aut_fusion(G, action.value_or(default_action(G)));
  long lower = iw(BT);
  long e = ecn(BT, std::nullopt, threads);
  CoverTensor P(BT);
  std::vector<long> cols;
  for (const auto& o : orbits)
    for (int c : o.class_indices) cols.push_back((long)c);
  prefetch_rows(P, BT.k(), cols);
  long upper = 0;
  for (long n = 1; n <= e - 1; ++n)
    if (cert_with(P, orbits, n, threads)) {
      upper = n;
      break;
    }
  if (upper == 0)
    throw MathError("ccn_bounds: certificate failed at ecn - 1, contradicting the "
                    "orbit refinement of class tuples");
  if (upper < lower)
    throw MathError("ccn_bounds: certificate below the involution width");
  return {lower, upper};
}

// ---------------------------------------------------------------------------
// Cubed-class criterion

ScubedResult scubed_check(const CharacterTable& T, long class_index) {
  if (class_index < 0 || class_index >= T.k())
    throw UsageError("scubed_check: class index out of range");
  ScubedResult res;
  res.is_exact = true;
  Rat esum(0);
  RatInterval isum(Rat(0));
  for (long r = 1; r < T.k(); ++r) {
    CycloNum m = cyclo_abs2(T.value(r, class_index));  // |chi(g)|^2, totally real
    Rat deg = Rat(T.degree(r));
    Rat sq;
    if (m.is_rational() && is_perfect_square(m.rational_value(), &sq)) {
      Rat term = sq * sq * sq / deg;
      esum += term;
      isum = isum + RatInterval(term);
      continue;
    }
    res.is_exact = false;
    RatInterval Im = enclose_real_cyclo(m);
    if (Im.lo < 0) Im.lo = Rat(0);  // squared modulus is nonnegative
    RatInterval I3 = ri_sqrt(Im) * Im;  // m^{3/2}
    RatInterval term = I3 * RatInterval(Rat(1) / deg);
    isum = ri_round_out(isum + term, 192);
  }
  res.enclosure = isum;
  if (res.is_exact) {
    res.exact_value = esum;
    res.less_than_one = esum < 1;
  } else {
    if (isum.hi < 1)
      res.less_than_one = true;
    else if (isum.lo > 1)
      res.less_than_one = false;
    else
      throw MathError("scubed_check: enclosure straddles 1 at the working precision");
  }
  if (res.less_than_one) {
    // sum < 1 forces C^3 to cover every nontrivial class; re-check.
    NormalSubset cov = class_product_cover(T, {class_index, class_index, class_index});
    for (long i = 1; i < T.k(); ++i)
      if (!cov.contains(i))
        throw MathError("scubed_check: sum < 1 but the cube misses a nontrivial class "
                        "(corrupt table)");
  }
  return res;
}

bool scubed_centralizer_bound(const CharacterTable& T, long class_index) {
  if (class_index < 0 || class_index >= T.k())
    throw UsageError("scubed_centralizer_bound: class index out of range");
  BigInt cent = T.order / T.classes[(std::size_t)class_index].size;
  BigInt lhs = cent * cent * cent;
  BigInt d = min_nontrivial_degree(T);
  return lhs <= d * d;
}

// ---------------------------------------------------------------------------
// Two-conjugate products of a regular semisimple element

bool gow_check(const Group& G, int s) {
  const std::string& kind = G.descriptor().kind;
  if (kind != "sl2" && kind != "psl2" && kind != "pgl2")
    throw UsageError("gow_check: needs an sl2, psl2 or pgl2 group");
  if (s < 0 || s >= G.order()) throw UsageError("gow_check: element index out of range");
  long q = G.descriptor().q;
  long p = factorize(BigInt(q))[0].first.get_si();
  long ord = G.element_order(s);
  if (ord % p == 0)
    throw UsageError("gow_check: element order divisible by the characteristic "
                     "(not semisimple)");
  long cent = G.centralizer_order(s);
  std::vector<long> torus;
  if (kind == "psl2" && q % 2 == 1)
    torus = {(q - 1) / 2, (q + 1) / 2};
  else
    torus = {q - 1, q + 1};
  if (std::find(torus.begin(), torus.end(), cent) == torus.end())
    throw UsageError("gow_check: centralizer order " + std::to_string(cent) +
                     " is not a maximal-torus order (not regular semisimple)");
  long cs = G.class_of(s);
  NormalSubset cover = brute_class_product(G, {cs, cs});
  for (const auto& c : G.classes()) {
    if (std::gcd(c.element_order, p) != 1) continue;
    if (!cover.contains(c.index)) return false;
  }
  return true;
}

}  // namespace covkit
