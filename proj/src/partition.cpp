#include "covkit/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace covkit {

bool partition_valid(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

long partition_sum(const Partition& p) {
  long s = 0;
  for (long x : p) s += x;
  return s;
}

std::vector<Partition> partitions_of(long n) {
  if (n < 0) throw UsageError("partitions_of: negative n");
  std::vector<Partition> out;
  Partition cur;
  // Largest-first depth-first emission is exactly descending lex order.
  std::function<void(long, long)> rec = [&](long left, long cap) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (long k = std::min(left, cap); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string partition_str(const Partition& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ']';
  return os.str();
}

BigInt centralizer_sn(const Partition& mu) {
  if (!partition_valid(mu)) throw UsageError("centralizer_sn: not a partition");
  BigInt z = 1;
  std::size_t i = 0;
  while (i < mu.size()) {
    std::size_t j = i;
    while (j < mu.size() && mu[j] == mu[i]) ++j;
    long mult = (long)(j - i);
    for (long r = 0; r < mult; ++r) z *= mu[i];
    for (long r = 2; r <= mult; ++r) z *= r;
    i = j;
  }
  return z;
}

int cycle_type_sign(const Partition& mu) {
  long n = partition_sum(mu);
  return ((n - (long)mu.size()) % 2 == 0) ? 1 : -1;
}

long lcm_of_parts(const Partition& mu) {
  long l = 1;
  for (long x : mu) l = std::lcm(l, x);
  return l;
}

Partition conjugate_partition(const Partition& p) {
  if (!partition_valid(p)) throw UsageError("conjugate_partition: not a partition");
  Partition out;
  if (p.empty()) return out;
  for (long j = 1; j <= p[0]; ++j) {
    long cnt = 0;
    for (long x : p)
      if (x >= j) ++cnt;
    out.push_back(cnt);
  }
  return out;
}

bool is_self_conjugate(const Partition& p) { return conjugate_partition(p) == p; }

Partition diagonal_hooks(const Partition& p) {
  Partition conj = conjugate_partition(p);
  Partition h;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < (long)i + 1) break;  // diagonal cell (i,i) exists iff p_i > i
    h.push_back(p[i] + conj[i] - 2 * (long)i - 1);
  }
  return h;
}

BigInt hook_degree(const Partition& p) {
  if (!partition_valid(p)) throw UsageError("hook_degree: not a partition");
  long n = partition_sum(p);
  BigInt num = 1;
  for (long r = 2; r <= n; ++r) num *= r;
  Partition conj = conjugate_partition(p);
  BigInt den = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (long j = 0; j < p[i]; ++j) den *= (p[i] - j) + (conj[(std::size_t)j] - (long)i) - 1;
  if (num % den != 0) throw MathError("hook_degree: hook product does not divide n!");
  return num / den;
}

bool all_parts_odd_distinct(const Partition& mu) {
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] % 2 == 0) return false;
    if (i > 0 && mu[i] == mu[i - 1]) return false;
  }
  return true;
}

}  // namespace covkit
