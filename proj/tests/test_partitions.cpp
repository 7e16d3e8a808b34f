#include <doctest.h>

#include "hurwitz/partitions.hpp"
#include "hurwitz/permutation.hpp"

#include <map>

using namespace hurwitz;

namespace {

// Counts partitions of n with parts at most k by direct recursion.
long brute_partition_count(int n, int k) {
  if (n == 0) return 1;
  long s = 0;
  for (int p = 1; p <= std::min(n, k); ++p) s += brute_partition_count(n - p, p);
  return s;
}

// Polynomial in one variable, coefficient vector truncated to `order`.
std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b, std::size_t order) {
  std::vector<Integer> r(order + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= order; ++i)
    for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

TEST_CASE("partitions are enumerated in reverse lexicographic order") {
  auto p0 = enumerate_partitions(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());

  auto p3 = enumerate_partitions(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0] == Partition({3}));
  CHECK(p3[1] == Partition({2, 1}));
  CHECK(p3[2] == Partition({1, 1, 1}));

  CHECK(enumerate_partitions(6).size() == 11);
  for (int n = 0; n <= 15; ++n) {
    CHECK(enumerate_partitions(n).size() == static_cast<std::size_t>(brute_partition_count(n, n)));
    CHECK(partition_count(n) == brute_partition_count(n, n));
  }
}

TEST_CASE("partition construction rejects bad input") {
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({2, 0}), DomainError);
  CHECK(parse_partition("1, 3,2") == Partition({3, 2, 1}));
  CHECK(parse_partition("").empty());
  CHECK_THROWS_AS(parse_partition("2,x"), DomainError);
  CHECK_THROWS_AS(parse_partition("2,,1"), DomainError);
  auto profiles = parse_profiles("2;2,1");
  REQUIRE(profiles.size() == 2);
  CHECK(profiles[1] == Partition({2, 1}));
  CHECK(parse_profiles("").empty());
}

TEST_CASE("class sizes") {
  CHECK(class_size(Partition({2}), 2) == 1);
  CHECK(class_size(Partition({2}), 3) == 3);
  CHECK(class_size(Partition({3, 2}), 5) == 20);
  CHECK_THROWS_AS(class_size(Partition({3}), 2), DomainError);

  for (int d = 1; d <= 6; ++d) {
    std::map<Partition, long> counts;
    for (const auto& p : all_permutations(d)) ++counts[p.cycle_type()];
    for (const auto& nu : enumerate_partitions(d)) {
      CHECK(class_size(nu, d) == counts[nu]);
      CHECK(class_size(nu.without_ones(), d) == counts[nu]);
      CHECK(class_size(nu, d) * centralizer_order(nu) == factorial(d));
    }
  }
}

TEST_CASE("automorphism counts") {
  CHECK(aut_count(Partition({2, 2, 1})) == 2);
  CHECK(aut_count(Partition({3, 3, 3})) == 6);
  CHECK(aut_count(Partition({5, 4, 3, 2, 1})) == 1);
  CHECK(aut_count(Composition{1, 2, 1}) == 2);
}

TEST_CASE("hook dimensions") {
  CHECK(hook_dim(Partition({4})) == 1);
  CHECK(hook_dim(Partition({2, 1})) == 2);
  CHECK(hook_dim(Partition({2, 2})) == 2);
  CHECK(hook_dim(Partition({3, 2})) == 5);
  for (int d = 0; d <= 8; ++d) {
    Integer s = 0;
    for (const auto& lam : enumerate_partitions(d)) s += hook_dim(lam) * hook_dim(lam);
    CHECK(s == factorial(d));
  }
}

TEST_CASE("contents") {
  CHECK(contents(Partition()).empty());
  auto c = contents(Partition({2, 1}));
  std::sort(c.begin(), c.end());
  CHECK(c == std::vector<int>{-1, 0, 1});
  c = contents(Partition({3, 1}));
  std::sort(c.begin(), c.end());
  CHECK(c == std::vector<int>{-1, 0, 1, 2});
  for (const auto& lam : enumerate_partitions(7)) {
    auto cc = contents(lam);
    CHECK(static_cast<int>(cc.size()) == lam.size());
    int durfee = 0;
    while (durfee < lam.length() && lam[durfee] > durfee) ++durfee;
    CHECK(std::count(cc.begin(), cc.end(), 0) == durfee);
  }
}

TEST_CASE("symmetric polynomial evaluation") {
  std::vector<int> v{0, 1, -1};
  CHECK(sym_eval(SymKind::elementary, 1, v) == 0);
  CHECK(sym_eval(SymKind::complete_homogeneous, 2, v) == 1);
  CHECK(sym_eval(SymKind::elementary, 4, v) == 0);
  CHECK(sym_eval(SymKind::elementary, 0, v) == 1);
  CHECK(sym_eval(SymKind::complete_homogeneous, 0, std::vector<int>{}) == 1);
  // h_2(1,2,3) = 1+4+9+2+3+6
  CHECK(sym_eval(SymKind::complete_homogeneous, 2, std::vector<int>{1, 2, 3}) == 25);
  CHECK(sym_eval(SymKind::elementary, 2, std::vector<int>{1, 2, 3}) == 11);
}

TEST_CASE("stirling numbers") {
  CHECK(stirling(StirlingKind::second, 0, 0) == 1);
  CHECK(stirling(StirlingKind::second, 3, 2) == 3);
  CHECK(stirling(StirlingKind::first_unsigned, 3, 2) == 3);
  CHECK(stirling(StirlingKind::first_unsigned, 0, 0) == 1);
  CHECK(stirling(StirlingKind::second, 4, 0) == 0);
  CHECK(stirling(StirlingKind::second, 2, 5) == 0);
  CHECK(stirling(StirlingKind::second, 10, 4) == 34105);
  CHECK(stirling(StirlingKind::first_unsigned, 10, 4) == 723680);
}

TEST_CASE("second kind times falling factorials gives powers") {
  for (int x = 1; x <= 6; ++x)
    for (int n = 0; n <= 8; ++n) {
      Integer s = 0;
      for (int k = 0; k <= n; ++k) {
        Integer ff = 1;
        for (int j = 0; j < k; ++j) ff *= x - j;
        s += stirling(StirlingKind::second, n, k) * ff;
      }
      CHECK(s == ipow(Integer(x), n));
    }
}

TEST_CASE("generating polynomials of Stirling numbers") {
  const std::size_t order = 10;
  // sum_k [n,k] z^{n-k} = prod_{r<n} (1 + r z)
  for (int n = 1; n <= 10; ++n) {
    std::vector<Integer> prod{1};
    for (int r = 1; r < n; ++r) prod = poly_mul(prod, {Integer(1), Integer(r)}, order);
    for (int k = 0; k <= n; ++k) {
      std::size_t e = static_cast<std::size_t>(n - k);
      if (e > order) continue;
      CHECK(stirling(StirlingKind::first_unsigned, n, k) == (e < prod.size() ? prod[e] : Integer(0)));
    }
  }
  // sum_n {n,k} x^{n-k} = prod_{r<=k} 1/(1 - r x)
  for (int k = 0; k <= 6; ++k) {
    std::vector<Integer> prod{1};
    for (int r = 1; r <= k; ++r) {
      std::vector<Integer> geo(order + 1);
      for (std::size_t j = 0; j <= order; ++j) geo[j] = ipow(Integer(r), j);
      prod = poly_mul(prod, geo, order);
    }
    prod.resize(order + 1, 0);
    for (std::size_t e = 0; e <= order; ++e) CHECK(stirling(StirlingKind::second, k + static_cast<int>(e), k) == prod[e]);
  }
}
