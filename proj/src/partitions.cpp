#include "hurwitz/partitions.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

Partition Partition::without_ones() const {
  std::vector<int> p;
  for (int x : parts_)
    if (x > 1) p.push_back(x);
  return Partition(std::move(p));
}

Partition Partition::padded(int d) const {
  if (d < size_) throw DomainError("cannot pad partition of " + std::to_string(size_) + " to " + std::to_string(d));
  std::vector<int> p = parts_;
  p.insert(p.end(), d - size_, 1);
  return Partition(std::move(p));
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (!parts_.empty()) {
    for (int j = 1; j <= parts_[0]; ++j) {
      int cnt = 0;
      for (int x : parts_)
        if (x >= j) ++cnt;
      c.push_back(cnt);
    }
  }
  return Partition(std::move(c));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int x : parts_) ++m[x];
  return m;
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

Composition parse_composition(const std::string& text) {
  Composition out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) {
      if (text.find_first_not_of(" \t,") == std::string::npos) continue;
      throw DomainError("empty part in '" + text + "'");
    }
    auto e = item.find_last_not_of(" \t");
    std::string tok = item.substr(b, e - b + 1);
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw DomainError("bad part '" + tok + "'");
    }
    if (pos != tok.size() || v < 1) throw DomainError("bad part '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

Partition parse_partition(const std::string& text) { return Partition::from_unsorted(parse_composition(text)); }

std::vector<Partition> parse_profiles(const std::string& text) {
  std::vector<Partition> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_partition(item));
  return out;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d) {
  if (d < 0) throw DomainError("negative partition size");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(d, d, cur, out);
  return out;
}

Integer partition_count(int n) {
  // Euler's pentagonal recurrence.
  if (n < 0) return 0;
  std::vector<Integer> p(n + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Integer s = 0;
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      int sign = (k % 2) ? 1 : -1;
      s += sign * p[m - g1];
      if (g2 <= m) s += sign * p[m - g2];
    }
    p[m] = s;
  }
  return p[n];
}

Integer aut_count(const Partition& mu) {
  Integer a = 1;
  for (auto [part, mult] : mu.multiplicities()) a *= factorial(mult);
  return a;
}

Integer aut_count(const Composition& mu) { return aut_count(Partition::from_unsorted(mu)); }

Integer centralizer_order(const Partition& nu) {
  Integer z = 1;
  for (auto [part, mult] : nu.multiplicities()) z *= ipow(Integer(part), mult) * factorial(mult);
  return z;
}

Integer class_size(const Partition& nu, int d) {
  if (nu.size() > d) throw DomainError("class_size: |nu| exceeds d");
  Partition full = nu.padded(d);
  return factorial(d) / centralizer_order(full);
}

Integer hook_dim(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  Integer prod = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) prod *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
  return factorial(lambda.size()) / prod;
}

std::vector<int> contents(const Partition& lambda) {
  std::vector<int> c;
  c.reserve(lambda.size());
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) c.push_back(j - i);
  return c;
}

Rational sym_eval(SymKind kind, int degree, const std::vector<Rational>& values) {
  if (degree < 0) throw DomainError("negative degree");
  // dp[j] = symmetric function of degree j in the values processed so far.
  std::vector<Rational> dp(degree + 1, Rational(0));
  dp[0] = 1;
  for (const Rational& x : values) {
    if (kind == SymKind::elementary) {
      for (int j = degree; j >= 1; --j) dp[j] += x * dp[j - 1];
    } else {
      for (int j = 1; j <= degree; ++j) dp[j] += x * dp[j - 1];
    }
  }
  return dp[degree];
}

Rational sym_eval(SymKind kind, int degree, const std::vector<int>& values) {
  std::vector<Rational> v(values.begin(), values.end());
  return sym_eval(kind, degree, v);
}

namespace {

struct StirlingTable {
  std::mutex mu;
  std::vector<std::vector<Integer>> rows{{Integer(1)}};  // rows[n][k], k <= n
};

Integer stirling_lookup(StirlingTable& t, bool first, int n, int k) {
  std::lock_guard<std::mutex> lock(t.mu);
  while (static_cast<int>(t.rows.size()) <= n) {
    int m = static_cast<int>(t.rows.size()) - 1;  // build row m+1 from row m
    const auto& prev = t.rows.back();
    std::vector<Integer> row(m + 2, Integer(0));
    for (int j = 1; j <= m + 1; ++j) {
      Integer a = j <= m ? prev[j] : Integer(0);
      row[j] = (first ? Integer(m) : Integer(j)) * a + prev[j - 1];
    }
    t.rows.push_back(std::move(row));
  }
  return t.rows[n][k];
}

}  // namespace

Integer stirling(StirlingKind kind, int n, int k) {
  if (n < 0 || k < 0) throw DomainError("negative Stirling index");
  if (k > n) return 0;
  static StirlingTable first_table, second_table;
  if (kind == StirlingKind::first_unsigned) return stirling_lookup(first_table, true, n, k);
  return stirling_lookup(second_table, false, n, k);
}

}  // namespace hurwitz
