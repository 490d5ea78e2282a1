#include "covkit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "covkit/rational.hpp"

namespace covkit {

Perm perm_identity(int n) {
  Perm p;
  p.img.resize((std::size_t)n);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

Perm perm_mult(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw UsageError("perm_mult: degrees differ");
  Perm r;
  r.img.resize(a.img.size());
  for (std::size_t x = 0; x < a.img.size(); ++x) r.img[x] = a.img[(std::size_t)b.img[x]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r;
  r.img.resize(a.img.size());
  for (std::size_t x = 0; x < a.img.size(); ++x) r.img[(std::size_t)a.img[x]] = (int)x;
  return r;
}

bool perm_is_identity(const Perm& a) {
  for (std::size_t x = 0; x < a.img.size(); ++x)
    if (a.img[x] != (int)x) return false;
  return true;
}

std::vector<int> cycle_type(const Perm& a) {
  int n = a.degree();
  std::vector<bool> seen((std::size_t)n, false);
  std::vector<int> type;
  for (int x = 0; x < n; ++x) {
    if (seen[(std::size_t)x]) continue;
    int len = 0, y = x;
    do {
      seen[(std::size_t)y] = true;
      y = a.img[(std::size_t)y];
      ++len;
    } while (y != x);
    type.push_back(len);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

bool perm_is_even(const Perm& a) {
  int transpositions = 0;
  for (int len : cycle_type(a)) transpositions += len - 1;
  return transpositions % 2 == 0;
}

long perm_order(const Perm& a) {
  long ord = 1;
  for (int len : cycle_type(a)) ord = std::lcm(ord, (long)len);
  return ord;
}

Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  if (n < 0) throw UsageError("perm_from_cycles: negative degree");
  Perm p = perm_identity(n);
  std::vector<bool> used((std::size_t)n, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int x = cyc[i];
      if (x < 0 || x >= n) throw UsageError("perm_from_cycles: point out of range");
      if (used[(std::size_t)x]) throw UsageError("perm_from_cycles: repeated point");
      used[(std::size_t)x] = true;
      p.img[(std::size_t)x] = cyc[(i + 1) % cyc.size()];
    }
  }
  return p;
}

std::string perm_cycles_str(const Perm& a) {
  int n = a.degree();
  std::vector<bool> seen((std::size_t)n, false);
  std::ostringstream out;
  bool any = false;
  for (int x = 0; x < n; ++x) {
    if (seen[(std::size_t)x] || a.img[(std::size_t)x] == x) continue;
    any = true;
    out << '(';
    int y = x;
    bool first = true;
    do {
      seen[(std::size_t)y] = true;
      if (!first) out << ' ';
      out << y + 1;
      first = false;
      y = a.img[(std::size_t)y];
    } while (y != x);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm perm_parse_cycles(int n, const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw UsageError("perm_parse_cycles: expected '(' at position " + std::to_string(i));
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit((unsigned char)text[i]))
        throw UsageError("perm_parse_cycles: expected point at position " + std::to_string(i));
      int v = 0;
      while (i < text.size() && std::isdigit((unsigned char)text[i])) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > n) throw UsageError("perm_parse_cycles: point " + std::to_string(v) + " out of range");
      cyc.push_back(v - 1);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw UsageError("perm_parse_cycles: unclosed cycle");
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return perm_from_cycles(n, cycles);
}

std::optional<Perm> conjugating_perm(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) return std::nullopt;
  if (cycle_type(a) != cycle_type(b)) return std::nullopt;
  int n = a.degree();
  // Decompose both into cycles, grouped by length with deterministic order
  // (by smallest moved point), then map a's cycles onto b's pointwise.
  auto cycles_of = [n](const Perm& p) {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen((std::size_t)n, false);
    for (int x = 0; x < n; ++x) {
      if (seen[(std::size_t)x]) continue;
      std::vector<int> cyc;
      int y = x;
      do {
        seen[(std::size_t)y] = true;
        cyc.push_back(y);
        y = p.img[(std::size_t)y];
      } while (y != x);
      cycles.push_back(std::move(cyc));
    }
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& u, const auto& v) { return u.size() < v.size(); });
    return cycles;
  };
  auto ca = cycles_of(a), cb = cycles_of(b);
  Perm w;
  w.img.assign((std::size_t)n, -1);
  for (std::size_t c = 0; c < ca.size(); ++c)
    for (std::size_t i = 0; i < ca[c].size(); ++i)
      w.img[(std::size_t)ca[c][i]] = cb[c][i];
  return w;
}

bool class_splits_in_alt(const std::vector<int>& ctype) {
  for (std::size_t i = 0; i < ctype.size(); ++i) {
    if (ctype[i] % 2 == 0) return false;
    if (i + 1 < ctype.size() && ctype[i] == ctype[i + 1]) return false;
  }
  return true;
}

bool same_alt_class(const Perm& a, const Perm& b) {
  if (!perm_is_even(a) || !perm_is_even(b))
    throw UsageError("same_alt_class: both permutations must be even");
  auto ta = cycle_type(a);
  if (ta != cycle_type(b)) return false;
  if (!class_splits_in_alt(ta)) return true;
  // Split type: the centralizer is contained in the alternating group, so
  // every conjugator carries the same parity and that parity decides.
  auto w = conjugating_perm(a, b);
  return perm_is_even(*w);
}

}  // namespace covkit
