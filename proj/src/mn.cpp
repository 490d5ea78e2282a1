#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "covkit/chartab.hpp"
#include "covkit/perm.hpp"

// Murnaghan-Nakayama evaluation and the symmetric/alternating tables built
// from it. The recursion works on beta-sets (first-column hook lengths):
// removing a border strip of length t replaces one beta number b by b - t,
// and the strip height is the number of beta numbers jumped over.

namespace covkit {

namespace {

using Memo = std::map<std::pair<Partition, Partition>, BigInt>;

BigInt mn_rec(const Partition& lam, const Partition& mu, std::size_t k, Memo& memo) {
  if (k == mu.size()) return 1;  // lam is empty exactly when the sizes matched
  Partition rest(mu.begin() + (long)k, mu.end());
  auto key = std::make_pair(lam, rest);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  long t = mu[k];
  long r = (long)lam.size();
  std::vector<long> B((std::size_t)r);
  for (long i = 0; i < r; ++i) B[(std::size_t)i] = lam[(std::size_t)i] + (r - 1 - i);

  BigInt total = 0;
  for (long i = 0; i < r; ++i) {
    long nb = B[(std::size_t)i] - t;
    if (nb < 0) continue;
    if (std::find(B.begin(), B.end(), nb) != B.end()) continue;
    int height = 0;
    for (long j = 0; j < r; ++j)
      if (B[(std::size_t)j] > nb && B[(std::size_t)j] < B[(std::size_t)i]) ++height;
    std::vector<long> B2 = B;
    B2[(std::size_t)i] = nb;
    std::sort(B2.begin(), B2.end(), std::greater<long>());
    Partition lam2;
    for (long j = 0; j < r; ++j) {
      long part = B2[(std::size_t)j] - (r - 1 - j);
      if (part > 0) lam2.push_back(part);
    }
    BigInt sub = mn_rec(lam2, mu, k + 1, memo);
    if (height % 2)
      total -= sub;
    else
      total += sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

BigInt factorial(long n) {
  BigInt f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string perm_group_name(const char* kind, long n) {
  Descriptor d;
  d.kind = kind;
  d.n = n;
  return d.name();
}

}  // namespace

BigInt mn_character(const Partition& lambda, const Partition& mu) {
  if (!partition_valid(lambda) || !partition_valid(mu))
    throw UsageError("mn_character: arguments must be partitions");
  if (partition_sum(lambda) != partition_sum(mu))
    throw UsageError("mn_character: partition sizes differ");
  Memo memo;
  return mn_rec(lambda, mu, 0, memo);
}

CharacterTable sn_table(long n) {
  if (n < 0) throw UsageError("sn_table: negative degree");
  if (n > 30) throw MathError("sn_table: partition count budget exceeded");

  auto rowparts = partitions_of(n);        // descending lex: (n) first
  auto colparts = rowparts;                // ascending lex: identity type first
  std::reverse(colparts.begin(), colparts.end());
  BigInt nf = factorial(n);

  CharacterTable T;
  T.group_name = perm_group_name("sym", n);
  T.order = nf;
  T.provenance = Provenance::MurnaghanNakayama;
  for (const Partition& mu : colparts)
    T.classes.push_back({partition_str(mu), nf / centralizer_sn(mu), lcm_of_parts(mu)});

  Memo memo;
  for (const Partition& lam : rowparts) {
    std::vector<CycloNum> row;
    row.reserve(colparts.size());
    for (const Partition& mu : colparts) row.push_back(CycloNum(mn_rec(lam, mu, 0, memo)));
    T.rows.push_back(std::move(row));
  }
  validate_table(T);
  return T;
}

CharacterTable alt_table(long n) {
  if (n < 1) throw UsageError("alt_table: degree must be at least 1");
  if (n > 16) throw MathError("alt_table: degree budget exceeded");

  BigInt halforder = (n >= 2) ? factorial(n) / 2 : BigInt(1);
  auto parts = partitions_of(n);
  auto colparts = parts;
  std::reverse(colparts.begin(), colparts.end());  // identity type first

  CharacterTable T;
  T.group_name = perm_group_name("alt", n);
  T.order = halforder;
  T.provenance = Provenance::MurnaghanNakayama;

  // Columns: even cycle types; all-odd-distinct types contribute two halves.
  std::vector<Partition> coltype;
  std::vector<int> colhalf;  // 0 whole class, +1 / -1 the split halves
  for (const Partition& mu : colparts) {
    if (cycle_type_sign(mu) != 1) continue;
    BigInt size = factorial(n) / centralizer_sn(mu);
    long ord = lcm_of_parts(mu);
    if (n >= 2 && all_parts_odd_distinct(mu)) {
      if (size % 2 != 0) throw MathError("alt_table: split class of odd size");
      T.classes.push_back({partition_str(mu) + "+", size / 2, ord});
      coltype.push_back(mu);
      colhalf.push_back(+1);
      T.classes.push_back({partition_str(mu) + "-", size / 2, ord});
      coltype.push_back(mu);
      colhalf.push_back(-1);
    } else {
      T.classes.push_back({partition_str(mu), size, ord});
      coltype.push_back(mu);
      colhalf.push_back(0);
    }
  }

  Memo memo;
  for (const Partition& lam : parts) {
    Partition conj = conjugate_partition(lam);
    if (lam < conj) continue;  // handled with its conjugate mate
    if (lam != conj) {
      // Restriction of a non-self-conjugate character: one row, constant on
      // split halves.
      std::vector<CycloNum> row;
      for (const Partition& mu : coltype) row.push_back(CycloNum(mn_rec(lam, mu, 0, memo)));
      T.rows.push_back(std::move(row));
      continue;
    }
    // Self-conjugate: two rows. Off the diagonal-hook type both take half
    // the S_n value; on its two halves the values are (eps +- sqrt(eps n'))/2
    // with the + root anchored at the "+" column.
    Partition h = diagonal_hooks(lam);
    long rlen = (long)h.size();
    long eps = ((n - rlen) / 2) % 2 == 0 ? 1 : -1;
    BigInt hprod = 1;
    for (long x : h) hprod *= x;
    CycloNum root = sqrt_of_integer(BigInt(eps) * hprod);
    if (mn_rec(lam, h, 0, memo) != eps)
      throw MathError("alt_table: diagonal-hook value is not the expected sign");

    std::vector<CycloNum> plus, minus;
    for (std::size_t c = 0; c < coltype.size(); ++c) {
      if (coltype[c] == h) {
        CycloNum hi = (CycloNum(eps) + root) / Rat(2);
        CycloNum lo = (CycloNum(eps) - root) / Rat(2);
        if (colhalf[c] > 0) {
          plus.push_back(hi);
          minus.push_back(lo);
        } else {
          plus.push_back(lo);
          minus.push_back(hi);
        }
      } else {
        BigInt v = mn_rec(lam, coltype[c], 0, memo);
        if (v % 2 != 0)
          throw MathError("alt_table: odd character value away from the hook type");
        BigInt half = v / 2;
        plus.push_back(CycloNum(half));
        minus.push_back(CycloNum(half));
      }
    }
    T.rows.push_back(std::move(plus));
    T.rows.push_back(std::move(minus));
  }
  validate_table(T);
  return T;
}

// ---------------------------------------------------------------------------
// Tying Murnaghan-Nakayama columns back to an enumerated group.
// ---------------------------------------------------------------------------

namespace {

Perm rep_perm(const Group& G, int element) {
  long n = G.descriptor().n;
  const std::int16_t* row = G.raw(element);
  Perm p;
  p.img.assign(row, row + n);
  return p;
}

Partition perm_partition(const Perm& p) {
  auto ct = cycle_type(p);
  return Partition(ct.begin(), ct.end());
}

// Label grammar: "[5,3,1]" with optional trailing "+" or "-".
std::pair<Partition, int> parse_type_label(const std::string& label) {
  Partition mu;
  std::size_t i = 0;
  auto fail = [&]() { throw UsageError("class label is not a cycle type: " + label); };
  if (i >= label.size() || label[i] != '[') fail();
  ++i;
  while (i < label.size() && label[i] != ']') {
    long v = 0;
    if (!isdigit((unsigned char)label[i])) fail();
    while (i < label.size() && isdigit((unsigned char)label[i]))
      v = v * 10 + (label[i++] - '0');
    mu.push_back(v);
    if (i < label.size() && label[i] == ',') ++i;
  }
  if (i >= label.size() || label[i] != ']') fail();
  ++i;
  int half = 0;
  if (i < label.size()) {
    if (label[i] == '+')
      half = +1;
    else if (label[i] == '-')
      half = -1;
    else
      fail();
    ++i;
  }
  if (i != label.size()) fail();
  return {mu, half};
}

// The consecutively filled permutation of a given cycle type: the anchor
// that names the "+" half of a split class.
Perm anchor_perm(long n, const Partition& mu) {
  std::vector<std::vector<int>> cycles;
  int next = 0;
  for (long part : mu) {
    std::vector<int> cyc;
    for (long j = 0; j < part; ++j) cyc.push_back(next++);
    cycles.push_back(cyc);
  }
  return perm_from_cycles((int)n, cycles);
}

}  // namespace

std::vector<long> table_group_class_map(const CharacterTable& T, const Group& G) {
  const auto& cls = G.classes();

  if (T.provenance == Provenance::BruteForce && T.group_name == G.name()) {
    if (T.k() != (long)cls.size())
      throw MathError("table_group_class_map: class counts differ");
    std::vector<long> out;
    for (long t = 0; t < T.k(); ++t) {
      if (T.classes[(std::size_t)t].size != BigInt(cls[(std::size_t)t].size) ||
          T.classes[(std::size_t)t].element_order != cls[(std::size_t)t].element_order)
        throw MathError("table_group_class_map: class data drifted from the group");
      out.push_back(t);
    }
    return out;
  }

  const std::string kind = G.descriptor().kind;
  if (T.provenance == Provenance::MurnaghanNakayama &&
      (kind == "alt" || kind == "sym") && T.group_name == G.name()) {
    long n = G.descriptor().n;
    std::vector<Partition> gtype;
    std::vector<Perm> grep;
    for (const ConjClass& c : cls) {
      Perm p = rep_perm(G, c.rep);
      gtype.push_back(perm_partition(p));
      grep.push_back(p);
    }
    std::vector<long> out(T.classes.size(), -1);
    for (std::size_t c = 0; c < T.classes.size(); ++c) {
      auto [mu, half] = parse_type_label(T.classes[c].label);
      std::vector<long> cand;
      for (std::size_t g = 0; g < gtype.size(); ++g)
        if (gtype[g] == mu) cand.push_back((long)g);
      if (half == 0) {
        if (cand.size() != 1)
          throw MathError("table_group_class_map: ambiguous cycle type " + T.classes[c].label);
        out[c] = cand[0];
      } else {
        if (cand.size() != 2)
          throw MathError("table_group_class_map: split type without two classes: " +
                          T.classes[c].label);
        Perm sigma = anchor_perm(n, mu);
        bool first_is_plus = same_alt_class(grep[(std::size_t)cand[0]], sigma);
        long plus = first_is_plus ? cand[0] : cand[1];
        long other = first_is_plus ? cand[1] : cand[0];
        out[c] = (half > 0) ? plus : other;
      }
    }
    return out;
  }

  throw UsageError("table_group_class_map: no canonical correspondence for this table");
}

}  // namespace covkit
