#include "covkit/permdecomp.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

#include "covkit/numtheory.hpp"

namespace covkit {

// ---------------------------------------------------------------------------
// Permutation basics

Permutation Permutation::identity(long n) {
  if (n < 0) throw UsageError("Permutation: degree must be non-negative");
  Permutation p;
  p.n = n;
  p.images.resize((std::size_t)n);
  std::iota(p.images.begin(), p.images.end(), 1L);
  return p;
}

Permutation Permutation::from_images(long n, std::vector<long> images) {
  if (n < 0) throw UsageError("Permutation: degree must be non-negative");
  if ((long)images.size() != n)
    throw UsageError("Permutation: expected " + std::to_string(n) + " images, got " +
                     std::to_string(images.size()));
  std::vector<char> seen((std::size_t)n, 0);
  for (long v : images) {
    if (v < 1 || v > n)
      throw UsageError("Permutation: image " + std::to_string(v) + " outside [1," +
                       std::to_string(n) + "]");
    if (seen[(std::size_t)(v - 1)])
      throw UsageError("Permutation: image " + std::to_string(v) + " repeated");
    seen[(std::size_t)(v - 1)] = 1;
  }
  Permutation p;
  p.n = n;
  p.images = std::move(images);
  return p;
}

long Permutation::apply(long x) const {
  if (x < 1 || x > n)
    throw UsageError("Permutation: point " + std::to_string(x) + " outside [1," +
                     std::to_string(n) + "]");
  return images[(std::size_t)(x - 1)];
}

bool Permutation::is_identity() const {
  for (long i = 0; i < n; ++i)
    if (images[(std::size_t)i] != i + 1) return false;
  return true;
}

Permutation perm_mult(const Permutation& a, const Permutation& b) {
  if (a.n != b.n) throw UsageError("perm_mult: degree mismatch");
  Permutation r;
  r.n = a.n;
  r.images.resize((std::size_t)a.n);
  for (long i = 0; i < a.n; ++i)
    r.images[(std::size_t)i] = a.images[(std::size_t)(b.images[(std::size_t)i] - 1)];
  return r;
}

Permutation perm_inverse(const Permutation& a) {
  Permutation r;
  r.n = a.n;
  r.images.resize((std::size_t)a.n);
  for (long i = 0; i < a.n; ++i) r.images[(std::size_t)(a.images[(std::size_t)i] - 1)] = i + 1;
  return r;
}

int perm_sign(const Permutation& a) {
  std::vector<char> seen((std::size_t)a.n, 0);
  long transpositions = 0;
  for (long i = 1; i <= a.n; ++i) {
    if (seen[(std::size_t)(i - 1)]) continue;
    long len = 0;
    for (long x = i; !seen[(std::size_t)(x - 1)]; x = a.images[(std::size_t)(x - 1)]) {
      seen[(std::size_t)(x - 1)] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return (transpositions % 2 == 0) ? 1 : -1;
}

long perm_fixed_count(const Permutation& a) {
  long f = 0;
  for (long i = 0; i < a.n; ++i) f += (a.images[(std::size_t)i] == i + 1);
  return f;
}

bool perm_order_divides(const Permutation& a, long m) {
  if (m < 1) throw UsageError("perm_order_divides: m must be positive");
  std::vector<char> seen((std::size_t)a.n, 0);
  for (long i = 1; i <= a.n; ++i) {
    if (seen[(std::size_t)(i - 1)]) continue;
    long len = 0;
    for (long x = i; !seen[(std::size_t)(x - 1)]; x = a.images[(std::size_t)(x - 1)]) {
      seen[(std::size_t)(x - 1)] = 1;
      ++len;
    }
    if (m % len != 0) return false;
  }
  return true;
}

std::vector<std::vector<long>> perm_cycles(const Permutation& a) {
  std::vector<std::vector<long>> out;
  std::vector<char> seen((std::size_t)a.n, 0);
  for (long i = 1; i <= a.n; ++i) {
    if (seen[(std::size_t)(i - 1)] || a.images[(std::size_t)(i - 1)] == i) continue;
    std::vector<long> cyc;
    for (long x = i; !seen[(std::size_t)(x - 1)]; x = a.images[(std::size_t)(x - 1)]) {
      seen[(std::size_t)(x - 1)] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Partition perm_cycle_type(const Permutation& a) {
  Partition parts;
  std::vector<char> seen((std::size_t)a.n, 0);
  for (long i = 1; i <= a.n; ++i) {
    if (seen[(std::size_t)(i - 1)]) continue;
    long len = 0;
    for (long x = i; !seen[(std::size_t)(x - 1)]; x = a.images[(std::size_t)(x - 1)]) {
      seen[(std::size_t)(x - 1)] = 1;
      ++len;
    }
    parts.push_back(len);
  }
  std::sort(parts.begin(), parts.end(), std::greater<long>());
  return parts;
}

std::string perm_str(const Permutation& a) {
  auto cycles = perm_cycles(a);
  if (cycles.empty()) return "()";
  std::string s;
  for (const auto& c : cycles) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

Permutation perm_parse(const std::string& text, long n) {
  Permutation p = Permutation::identity(n);
  std::vector<char> used((std::size_t)n, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto fail = [&](const std::string& what) -> void {
    throw UsageError("perm_parse: " + what + " at position " + std::to_string(i));
  };
  skip_ws();
  if (i == text.size()) fail("empty input (the identity is \"()\")");
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') fail("expected '('");
    ++i;
    skip_ws();
    std::vector<long> cyc;
    if (i < text.size() && text[i] == ')') {
      ++i;  // "()" : an empty cycle, allowed as the identity
    } else {
      while (true) {
        skip_ws();
        std::size_t start = i;
        long v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
          v = v * 10 + (text[i] - '0');
          if (v > n) break;
          ++i;
        }
        if (i == start) fail("expected a point");
        if (v < 1 || v > n)
          throw UsageError("perm_parse: point " + std::to_string(v) + " outside [1," +
                           std::to_string(n) + "] at position " + std::to_string(start));
        if (used[(std::size_t)(v - 1)])
          throw UsageError("perm_parse: point " + std::to_string(v) +
                           " repeated at position " + std::to_string(start));
        used[(std::size_t)(v - 1)] = 1;
        cyc.push_back(v);
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    for (std::size_t j = 0; j < cyc.size(); ++j)
      p.images[(std::size_t)(cyc[j] - 1)] = cyc[(j + 1) % cyc.size()];
    any_cycle = true;
    skip_ws();
  }
  if (!any_cycle) fail("no cycles");
  return p;
}

long type_threshold(long p) {
  switch (p) {
    case 2: return TypeThresholds::B2;
    case 3: return TypeThresholds::B3;
    case 5: return TypeThresholds::B5;
    default: throw UsageError("type_threshold: p must be 2, 3 or 5");
  }
}

// ---------------------------------------------------------------------------
// Pattern machinery shared by the factorization routines
namespace {

// A pattern permutation on {1..m}, built from disjoint cycles.
struct Pattern {
  long m = 0;
  std::vector<long> img;
  explicit Pattern(long m_) : m(m_), img((std::size_t)m_) {
    std::iota(img.begin(), img.end(), 1L);
  }
  void cycle(std::initializer_list<long> pts) { cycle(std::vector<long>(pts)); }
  void cycle(const std::vector<long>& pts) {
    for (std::size_t j = 0; j < pts.size(); ++j)
      img[(std::size_t)(pts[j] - 1)] = pts[(j + 1) % pts.size()];
  }
  long operator()(long x) const { return img[(std::size_t)(x - 1)]; }
};

// Transfers the pattern pair (f, g) on {1..m} onto the given target cycles,
// writing into the factor accumulators. The product f(g(x)) must decompose
// into cycles whose lengths match the target cycle lengths exactly (the
// pattern support has no fixed points); cycles of equal length are matched
// in order of least point.
void relabel_onto(const Pattern& f, const Pattern& g,
                  const std::vector<std::vector<long>>& targets, Permutation& out1,
                  Permutation& out2) {
  long m = f.m;
  // Product cycles of the pattern.
  std::vector<std::vector<long>> pc;
  std::vector<char> seen((std::size_t)m, 0);
  for (long i = 1; i <= m; ++i) {
    if (seen[(std::size_t)(i - 1)]) continue;
    std::vector<long> cyc;
    for (long x = i; !seen[(std::size_t)(x - 1)]; x = f(g(x))) {
      seen[(std::size_t)(x - 1)] = 1;
      cyc.push_back(x);
    }
    pc.push_back(std::move(cyc));
  }
  if (pc.size() != targets.size())
    throw MathError("pattern product has the wrong number of cycles");
  // Both lists are ordered by least point; order each by length first,
  // keeping least-point order within a length.
  auto by_len = [](const std::vector<std::vector<long>>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), (std::size_t)0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return v[a].size() < v[b].size();
    });
    return idx;
  };
  auto pi_order = by_len(pc);
  auto tg_order = by_len(targets);
  std::vector<long> relab((std::size_t)m, 0);
  for (std::size_t r = 0; r < pc.size(); ++r) {
    const auto& a = pc[pi_order[r]];
    const auto& b = targets[tg_order[r]];
    if (a.size() != b.size()) throw MathError("pattern product has the wrong cycle lengths");
    for (std::size_t j = 0; j < a.size(); ++j) relab[(std::size_t)(a[j] - 1)] = b[j];
  }
  for (long x = 1; x <= m; ++x) {
    if (relab[(std::size_t)(x - 1)] == 0) throw MathError("pattern support has a fixed point");
    out1.images[(std::size_t)(relab[(std::size_t)(x - 1)] - 1)] =
        relab[(std::size_t)(f(x) - 1)];
    out2.images[(std::size_t)(relab[(std::size_t)(x - 1)] - 1)] =
        relab[(std::size_t)(g(x) - 1)];
  }
}

// sigma_{k,l} / tau_{k,l}: chains of 3-cycles with a phase shift at the
// junction; the products below split into one or two cycles whose lengths
// are controlled by (k, l).
Pattern sigma_kl(long m, long k, long l) {
  Pattern s(m);
  for (long i = 0; i < k; ++i) s.cycle({4 * i + 1, 4 * i + 2, 4 * i + 3});
  for (long j = k; j <= l; ++j) s.cycle({4 * j, 4 * j + 1, 4 * j + 2});
  return s;
}

Pattern tau_kl(long m, long k, long l) {
  Pattern t(m);
  for (long i = 0; i < k; ++i) t.cycle({4 * i + 3, 4 * i + 4, 4 * i + 5});
  for (long j = k; j <= l; ++j) t.cycle({4 * j + 2, 4 * j + 3, 4 * j + 4});
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// Factorizations

std::pair<Permutation, Permutation> two_involutions(const Permutation& sigma) {
  Permutation t1 = Permutation::identity(sigma.n);
  Permutation t2 = Permutation::identity(sigma.n);
  for (const auto& cyc : perm_cycles(sigma)) {
    long m = (long)cyc.size();
    Pattern f(m), g(m);
    if (m % 2 == 1) {
      long k = (m - 1) / 2;  // (2k+1)-cycle = sigma_k tau_k
      for (long i = 1; i <= k; ++i) f.cycle({2 * i - 1, 2 * i});
      for (long i = 1; i <= k; ++i) g.cycle({2 * i, 2 * i + 1});
    } else {
      long k = m / 2;  // 2k-cycle = sigma_k tau_{k-1}
      for (long i = 1; i <= k; ++i) f.cycle({2 * i - 1, 2 * i});
      for (long i = 1; i <= k - 1; ++i) g.cycle({2 * i, 2 * i + 1});
    }
    relabel_onto(f, g, {cyc}, t1, t2);
  }
  return {t1, t2};
}

std::pair<Permutation, Permutation> involution_order3(const Permutation& sigma) {
  Permutation t = Permutation::identity(sigma.n);
  Permutation r = Permutation::identity(sigma.n);
  for (const auto& cyc : perm_cycles(sigma)) {
    long m = (long)cyc.size();
    Pattern f(m), g(m);
    if (m % 3 == 1) {
      long k = (m - 1) / 3;  // (3k+1)-cycle = sigma_k tau_k
      for (long i = 0; i < k; ++i) f.cycle({3 * i + 1, 3 * i + 2});
      for (long i = 0; i < k; ++i) g.cycle({3 * i + 2, 3 * i + 3, 3 * i + 4});
    } else if (m % 3 == 2) {
      long k = (m - 2) / 3;  // (3k+2)-cycle = sigma_{k+1} tau_k
      for (long i = 0; i <= k; ++i) f.cycle({3 * i + 1, 3 * i + 2});
      for (long i = 0; i < k; ++i) g.cycle({3 * i + 2, 3 * i + 3, 3 * i + 4});
    } else {
      long k = (m - 3) / 3;  // (3k+3)-cycle = sigma'_k tau'_{k+1}
      for (long i = 0; i < k; ++i) f.cycle({3 * i + 3, 3 * i + 4});
      for (long i = 0; i <= k; ++i) g.cycle({3 * i + 1, 3 * i + 2, 3 * i + 3});
    }
    relabel_onto(f, g, {cyc}, t, r);
  }
  return {t, r};
}

std::pair<Permutation, Permutation> two_order3(const Permutation& sigma, bool must_be_even) {
  if (perm_sign(sigma) < 0) {
    if (must_be_even) throw UsageError("two_order3: sigma must be an even permutation");
    throw MathError(
        "two_order3: an odd permutation is not a product of two elements of "
        "order dividing 3");
  }
  Permutation r1 = Permutation::identity(sigma.n);
  Permutation r2 = Permutation::identity(sigma.n);
  std::vector<std::vector<long>> evens;
  for (const auto& cyc : perm_cycles(sigma)) {
    long m = (long)cyc.size();
    if (m % 2 == 0) {
      evens.push_back(cyc);
      continue;
    }
    long k;
    Pattern f(m), g(m);
    if (m % 4 == 3) {
      k = (m + 1) / 4;  // (4k-1)-cycle = sigma_{k,k-1} tau_{k-1,k-2}
      f = sigma_kl(m, k, k - 1);
      g = tau_kl(m, k - 1, k - 2);
    } else {
      k = (m - 1) / 4;  // (4k+1)-cycle = sigma_{k,k-1} tau_{k,k-1}
      f = sigma_kl(m, k, k - 1);
      g = tau_kl(m, k, k - 1);
    }
    relabel_onto(f, g, {cyc}, r1, r2);
  }
  // An even permutation has an even number of even-length cycles; pair them
  // longest-with-longest.
  if (evens.size() % 2 != 0) throw MathError("two_order3: internal parity error");
  std::stable_sort(evens.begin(), evens.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (std::size_t e = 0; e + 1 < evens.size(); e += 2) {
    const auto& ca = evens[e];
    const auto& cb = evens[e + 1];
    long a = (long)std::min(ca.size(), cb.size());
    long b = (long)std::max(ca.size(), cb.size());
    long m = a + b;
    Pattern f(m), g(m);
    if (a % 4 == 0 && b % 4 == 0) {
      long k = a / 4, l = (a + b - 4) / 4;  // (4k, 4l+4-4k) = sigma_{k,l} tau_{k,l}
      f = sigma_kl(m, k, l);
      g = tau_kl(m, k, l);
    } else if (a % 4 == 2 && b % 4 == 2) {
      if (a == 2 && b == 2) {
        // Two transpositions: handled by an explicit pair of 3-cycles whose
        // product is (1,3)(2,4).
        f.cycle({1, 2, 3});
        g.cycle({1, 2, 4});
      } else {
        long k = (a + 2) / 4, l = (a + b - 4) / 4;  // (4k-2, 4l+6-4k) = sigma_{k,l} tau_{k-1,l}
        f = sigma_kl(m, k, l);
        g = tau_kl(m, k - 1, l);
      }
    } else {
      long z = (a % 4 == 0) ? a : b;  // the length divisible by 4
      long t = a + b - z;
      long k = z / 4, l = (z + t - 2) / 4;  // (4k, 4l+2-4k) = sigma_{k,l} tau_{k,l-1}
      f = sigma_kl(m, k, l);
      g = tau_kl(m, k, l - 1);
    }
    relabel_onto(f, g, {ca, cb}, r1, r2);
  }
  if (!perm_order_divides(r1, 3) || !perm_order_divides(r2, 3) || perm_sign(r1) < 0 ||
      perm_sign(r2) < 0)
    throw MathError("two_order3: internal factor verification failed");
  return {r1, r2};
}

// ---------------------------------------------------------------------------
// Greedy p-power constructions

namespace {

// Builds sigma with sigma(u_i) = v_i and sigma^p = 1, completing each moving
// pair's p-set with the least points that avoid every pair endpoint and the
// reserved set. Preconditions on the pairs themselves must already hold.
Permutation p_mapper_core(long p, long n, const std::vector<std::pair<long, long>>& pairs,
                          const std::vector<char>& reserved, long* moving_out) {
  std::vector<char> used((std::size_t)(n + 1), 0);
  for (const auto& [u, v] : pairs) {
    used[(std::size_t)u] = 1;
    used[(std::size_t)v] = 1;
  }
  Permutation sigma = Permutation::identity(n);
  long cursor = 1, moving = 0;
  for (const auto& [u, v] : pairs) {
    if (u == v) continue;  // X_i = {u_i}
    ++moving;
    std::vector<long> cyc = {u, v};
    for (long need = p - 2; need > 0; --need) {
      while (cursor <= n && (used[(std::size_t)cursor] || reserved[(std::size_t)cursor]))
        ++cursor;
      if (cursor > n) throw MathError("insufficient room for the p-sets");
      used[(std::size_t)cursor] = 1;
      cyc.push_back(cursor);
    }
    for (std::size_t j = 0; j < cyc.size(); ++j)
      sigma.images[(std::size_t)(cyc[j] - 1)] = cyc[(j + 1) % cyc.size()];
  }
  if (moving_out) *moving_out = moving;
  return sigma;
}

void validate_pairs(long n, const std::vector<std::pair<long, long>>& pairs) {
  std::vector<long> us, vs;
  for (const auto& [u, v] : pairs) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw UsageError("pair endpoint outside [1," + std::to_string(n) + "]");
    us.push_back(u);
    vs.push_back(v);
  }
  auto dup = [](std::vector<long> w) {
    std::sort(w.begin(), w.end());
    return std::adjacent_find(w.begin(), w.end()) != w.end();
  };
  if (dup(us)) throw UsageError("the u_i must be pairwise distinct");
  if (dup(vs)) throw UsageError("the v_i must be pairwise distinct");
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if (i != j && pairs[i].first == pairs[j].second)
        throw UsageError("u_" + std::to_string(i + 1) + " equals v_" + std::to_string(j + 1));
}

}  // namespace

Permutation lemma_construct(long p, long n, const std::vector<std::pair<long, long>>& pairs) {
  if (p < 2 || !is_prime_u64((std::uint64_t)p))
    throw UsageError("lemma_construct: p must be prime");
  if (n < 1) throw UsageError("lemma_construct: n must be positive");
  if (n < p * (long)pairs.size())
    throw UsageError("lemma_construct: requires n >= p * pairs, i.e. n >= " +
                     std::to_string(p * (long)pairs.size()));
  validate_pairs(n, pairs);
  std::vector<char> reserved((std::size_t)(n + 1), 0);
  return p_mapper_core(p, n, pairs, reserved, nullptr);
}

Permutation fixed_point_steering(const Permutation& rho, long p, long want_fixed) {
  long B = type_threshold(p);
  if (want_fixed < 0) throw UsageError("fixed_point_steering: want_fixed must be >= 0");
  long n = rho.n;
  long need = (p + 1) * want_fixed + B + (p == 2 ? 2 : 0);
  if (n < need)
    throw UsageError("fixed_point_steering: requires degree >= " + std::to_string(need) +
                     ", got " + std::to_string(n));

  // x_1..x_w distinct with rho(x_i) != x_j for i != j.
  std::vector<char> in_x((std::size_t)(n + 1), 0), in_rho_x((std::size_t)(n + 1), 0);
  std::vector<long> xs;
  for (long x = 1; x <= n && (long)xs.size() < want_fixed; ++x) {
    long rx = rho.apply(x);
    if (in_rho_x[(std::size_t)x]) continue;
    if (rx != x && in_x[(std::size_t)rx]) continue;
    xs.push_back(x);
    in_x[(std::size_t)x] = 1;
    in_rho_x[(std::size_t)rx] = 1;
  }
  if ((long)xs.size() < want_fixed)
    throw MathError("fixed_point_steering: could not select the x sequence");

  // y_1..y_B outside {x_j} and {rho(x_j)}: pi will be built to fix them.
  std::vector<char> reserved((std::size_t)(n + 1), 0);
  long got = 0;
  for (long y = 1; y <= n && got < B; ++y) {
    if (in_x[(std::size_t)y] || in_rho_x[(std::size_t)y]) continue;
    reserved[(std::size_t)y] = 1;
    ++got;
  }
  if (got < B) throw MathError("fixed_point_steering: could not select the y sequence");

  std::vector<std::pair<long, long>> pairs;
  for (long x : xs) pairs.emplace_back(rho.apply(x), x);
  long moving = 0;
  Permutation pi = p_mapper_core(p, n, pairs, reserved, &moving);

  if (p == 2 && moving % 2 == 1) {
    // A product of an odd number of transpositions is odd; append one more
    // on two untouched, unreserved points.
    std::vector<long> fresh;
    for (long x = 1; x <= n && fresh.size() < 2; ++x)
      if (!reserved[(std::size_t)x] && pi.apply(x) == x && !in_x[(std::size_t)x] &&
          !in_rho_x[(std::size_t)x])
        fresh.push_back(x);
    if (fresh.size() < 2) throw MathError("fixed_point_steering: no room for parity fix");
    pi.images[(std::size_t)(fresh[0] - 1)] = fresh[1];
    pi.images[(std::size_t)(fresh[1] - 1)] = fresh[0];
  }

  if (!perm_order_divides(pi, p) || perm_sign(pi) < 0 || perm_fixed_count(pi) < B ||
      perm_fixed_count(perm_mult(pi, rho)) < want_fixed)
    throw MathError("fixed_point_steering: output verification failed");
  return pi;
}

// ---------------------------------------------------------------------------
// Exhaustive covering verifiers

namespace {

// Canonical representative of the cycle type mu: cycles filled with
// consecutive points.
Permutation type_rep(long n, const Partition& mu) {
  Permutation t = Permutation::identity(n);
  long next = 1;
  for (long part : mu) {
    if (part > 1) {
      std::vector<long> cyc(part);
      std::iota(cyc.begin(), cyc.end(), next);
      for (std::size_t j = 0; j < cyc.size(); ++j)
        t.images[(std::size_t)(cyc[j] - 1)] = cyc[(j + 1) % cyc.size()];
    }
    next += part;
  }
  return t;
}

// One representative per Alt(n) class: every even cycle type, twice (the
// canonical representative conjugated by the transposition (1,2)) when the
// type's single Sym(n) class splits in Alt(n).
std::vector<Permutation> alt_class_reps(long n) {
  std::vector<Permutation> reps;
  for (const Partition& mu : partitions_of(n)) {
    if (cycle_type_sign(mu) != 1) continue;
    Permutation t = type_rep(n, mu);
    reps.push_back(t);
    if (all_parts_odd_distinct(mu)) {
      Permutation s = t;
      // Conjugation by (1,2): swap the roles of points 1 and 2.
      std::swap(s.images[0], s.images[1]);
      for (long i = 0; i < n; ++i) {
        if (s.images[(std::size_t)i] == 1)
          s.images[(std::size_t)i] = 2;
        else if (s.images[(std::size_t)i] == 2)
          s.images[(std::size_t)i] = 1;
      }
      reps.push_back(s);
    }
  }
  return reps;
}

bool cycle_type_is(const Permutation& a, const Partition& mu) {
  return perm_cycle_type(a) == mu;
}

// Visits every permutation of {1..n} whose nontrivial cycles have lengths
// exactly `lens` (weakly decreasing, parts >= 2). Stops when visit returns
// true, and reports whether that happened.
bool for_each_of_type(long n, const std::vector<long>& lens,
                      const std::function<bool(const Permutation&)>& visit) {
  // Recursive descent: place each cycle on the least unused point plus a
  // combination of the remaining points, in every cyclic arrangement.
  Permutation work = Permutation::identity(n);
  std::vector<char> used((std::size_t)(n + 1), 0);
  // To avoid emitting a permutation twice when equal cycle lengths occur,
  // every cycle is anchored at the least point unused so far... anchoring at
  // the global least unused point is wrong for unequal lengths (the longer
  // cycle may avoid that point), so anchor only ties: cycles are placed in
  // the given order, and a cycle of the same length as its predecessor must
  // have a larger least point.
  std::function<bool(std::size_t, long)> place = [&](std::size_t ci, long min_anchor) -> bool {
    if (ci == lens.size()) return visit(work);
    long len = lens[ci];
    long anchor_floor = (ci > 0 && lens[ci - 1] == len) ? min_anchor + 1 : 1;
    // Choose the anchor: the least point of this cycle.
    for (long a = anchor_floor; a + len - 1 <= n + (long)0; ++a) {
      if (used[(std::size_t)a]) continue;
      // Choose the remaining len-1 points from points > a, as combinations,
      // then in every order.
      std::vector<long> avail;
      for (long x = a + 1; x <= n; ++x)
        if (!used[(std::size_t)x]) avail.push_back(x);
      if ((long)avail.size() < len - 1) continue;
      std::vector<long> sel((std::size_t)(len - 1));
      std::vector<std::size_t> comb((std::size_t)(len - 1));
      std::iota(comb.begin(), comb.end(), (std::size_t)0);
      bool more = true;
      while (more) {
        for (std::size_t j = 0; j < comb.size(); ++j) sel[j] = avail[comb[j]];
        // All cyclic arrangements: permute sel.
        std::sort(sel.begin(), sel.end());
        bool more_perm = true;
        while (more_perm) {
          used[(std::size_t)a] = 1;
          for (long x : sel) used[(std::size_t)x] = 1;
          work.images[(std::size_t)(a - 1)] = sel.empty() ? a : sel[0];
          for (std::size_t j = 0; j + 1 < sel.size(); ++j)
            work.images[(std::size_t)(sel[j] - 1)] = sel[j + 1];
          if (!sel.empty()) work.images[(std::size_t)(sel.back() - 1)] = a;
          bool found = place(ci + 1, a);
          // Undo.
          work.images[(std::size_t)(a - 1)] = a;
          for (long x : sel) work.images[(std::size_t)(x - 1)] = x;
          used[(std::size_t)a] = 0;
          for (long x : sel) used[(std::size_t)x] = 0;
          if (found) return true;
          more_perm = std::next_permutation(sel.begin(), sel.end());
        }
        // Next combination of indices into avail.
        long t = (long)comb.size() - 1;
        while (t >= 0 && comb[(std::size_t)t] == avail.size() - comb.size() + (std::size_t)t)
          --t;
        if (t < 0)
          more = false;
        else {
          ++comb[(std::size_t)t];
          for (std::size_t j = (std::size_t)t + 1; j < comb.size(); ++j)
            comb[j] = comb[j - 1] + 1;
        }
      }
    }
    return false;
  };
  return place(0, 0);
}

// Does some x of nontrivial-cycle profile `lens` satisfy x^{-1} t of the
// same profile? (Then t = x * y with both factors of that profile.)
bool two_factor_hit(long n, const std::vector<long>& lens, const Permutation& t) {
  Partition full = lens;
  long covered = 0;
  for (long v : lens) covered += v;
  for (long i = 0; i < n - covered; ++i) full.push_back(1);
  std::sort(full.begin(), full.end(), std::greater<long>());
  return for_each_of_type(n, lens, [&](const Permutation& x) {
    return cycle_type_is(perm_mult(perm_inverse(x), t), full);
  });
}

}  // namespace

bool verify_bertrand(long n, long p) {
  if (n < 2) throw UsageError("verify_bertrand: n must be at least 2");
  if (p < 2 || !is_prime_u64((std::uint64_t)p))
    throw UsageError("verify_bertrand: p must be prime");
  if (p < (3 * n) / 4 || p > n)
    throw UsageError("verify_bertrand: requires floor(3n/4) <= p <= n");
  if (n > 12) throw MathError("verify_bertrand: enumeration budget exceeded (n <= 12)");
  for (const Permutation& t : alt_class_reps(n))
    if (!two_factor_hit(n, {p}, t)) return false;
  return true;
}

bool verify_xu(long n, long r, long s) {
  if (n < 2) throw UsageError("verify_xu: n must be at least 2");
  if (r < 2 || s < 2) throw UsageError("verify_xu: cycle lengths must be at least 2");
  if (r + s < n - 1 || r + s > n) throw UsageError("verify_xu: requires n-1 <= r+s <= n");
  if (n > 11) throw MathError("verify_xu: enumeration budget exceeded (n <= 11)");
  std::vector<long> lens = {std::max(r, s), std::min(r, s)};
  for (const Permutation& t : alt_class_reps(n))
    if (!two_factor_hit(n, lens, t)) return false;
  return true;
}

}  // namespace covkit
