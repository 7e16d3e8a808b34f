#include <doctest.h>

#include "hurwitz/characters.hpp"
#include "hurwitz/oracle.hpp"

#include <filesystem>
#include <map>

using namespace hurwitz;

namespace {

// Element of the rational group algebra of S_d.
using Algebra = std::map<std::vector<int>, Rational>;

std::vector<int> images(const Permutation& p) {
  std::vector<int> v(p.degree());
  for (int i = 0; i < p.degree(); ++i) v[i] = p(i);
  return v;
}

Algebra identity_element(int d) {
  return {{images(Permutation(d)), Rational(1)}};
}

Algebra mul(const Algebra& a, const Algebra& b) {
  Algebra r;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) {
      auto prod = Permutation::from_one_line(pa) * Permutation::from_one_line(pb);
      r[images(prod)] += ca * cb;
    }
  return r;
}

Algebra add(const Algebra& a, const Algebra& b) {
  Algebra r = a;
  for (const auto& [p, c] : b) r[p] += c;
  return r;
}

// h_n or e_n of J_2..J_d inside the group algebra
Algebra jm_symmetric(SymKind kind, int n, int d) {
  std::vector<Algebra> J;
  for (int k = 1; k < d; ++k) {
    Algebra jk;
    for (int i = 0; i < k; ++i) jk[images(Permutation::transposition(d, i, k))] += 1;
    J.push_back(jk);
  }
  std::vector<Algebra> dp(n + 1);
  dp[0] = identity_element(d);
  for (const auto& x : J) {
    if (kind == SymKind::elementary) {
      for (int j = n; j >= 1; --j) dp[j] = add(dp[j], mul(x, dp[j - 1]));
    } else {
      for (int j = 1; j <= n; ++j) dp[j] = add(dp[j], mul(x, dp[j - 1]));
    }
  }
  return dp[n];
}

}  // namespace

TEST_CASE("character values") {
  CHECK(character(Partition({4}), Partition({3, 1})) == 1);
  CHECK(character(Partition({1, 1, 1}), Partition({2, 1})) == -1);
  CHECK(character(Partition({2, 1}), Partition({3})) == -1);
  CHECK(character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(character(Partition({2, 2}), Partition({2, 2})) == 2);
  CHECK(character(Partition({3, 2}), Partition({5})) == 0);
  CHECK_THROWS_AS(character(Partition({3}), Partition({2})), DomainError);
}

TEST_CASE("characters agree with traces of permutation representations") {
  // chi of the permutation representation on d points is 1 + chi^{(d-1,1)}
  for (int d = 2; d <= 7; ++d)
    for (const auto& nu : enumerate_partitions(d)) {
      int fixed = static_cast<int>(std::count(nu.begin(), nu.end(), 1));
      CHECK(character(Partition({d - 1, 1}), nu) == fixed - 1);
    }
}

TEST_CASE("orthogonality") {
  for (int d = 1; d <= 8; ++d) {
    const auto& table = character_table(d);
    for (const auto& lam : table.partitions()) CHECK(table.at(lam, Partition(std::vector<int>(d, 1))) == hook_dim(lam));
    for (const auto& nu : table.partitions()) {
      Integer col = 0;
      for (const auto& lam : table.partitions()) col += table.at(lam, nu) * table.at(lam, nu);
      CHECK(col == centralizer_order(nu));
    }
  }
}

TEST_CASE("central characters") {
  CHECK(central_character_f(Partition(), Partition({3, 1})) == 1);
  CHECK(central_character_f(Partition({2}), Partition({2})) == 1);
  CHECK(central_character_f(Partition({2}), Partition({1, 1})) == -1);
  CHECK(central_character_f(Partition({3}), Partition({2})) == 0);
  CHECK_THROWS_AS(central_character_f(Partition({2, 1}), Partition({3})), DomainError);
  for (int n = 0; n <= 8; ++n)
    for (const auto& lam : enumerate_partitions(n)) CHECK(central_character_f(Partition(), lam) == 1);
}

TEST_CASE("low central characters as shifted symmetric functions") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& lam : enumerate_partitions(n)) {
      CHECK(shifted_central_character(Partition({1}), lam) == n);
      Rational s = 0;
      for (int i = 1; i <= lam.length(); ++i) {
        Rational a = Rational(lam[i - 1] - i) + Rational(1, 2), b = Rational(-i) + Rational(1, 2);
        s += a * a - b * b;
      }
      CHECK(central_character_f(Partition({2}), lam) == s / 2);
      if (n >= 2) CHECK(shifted_central_character(Partition({2}), lam) == central_character_f(Partition({2}), lam));
    }
}

TEST_CASE("symmetric functions of Jucys-Murphy elements act by contents") {
  for (int d = 1; d <= 4; ++d) {
    for (SymKind kind : {SymKind::complete_homogeneous, SymKind::elementary}) {
      for (int n = 1; n <= 2; ++n) {
        Algebra z = jm_symmetric(kind, n, d);
        // coefficient on each class, checked constant along the class
        std::map<Partition, Rational> per_class;
        for (const auto& p : all_permutations(d)) {
          auto it = z.find(images(p));
          Rational c = it == z.end() ? Rational(0) : it->second;
          auto [pos, inserted] = per_class.emplace(p.cycle_type(), c);
          CHECK(pos->second == c);
        }
        for (const auto& lam : enumerate_partitions(d)) {
          Rational omega = 0;
          for (const auto& [nu, c] : per_class) omega += c * class_size(nu, d) * character(lam, nu);
          omega /= hook_dim(lam);
          CHECK(omega == sym_eval(kind, n, contents(lam)));
        }
      }
    }
  }
}

TEST_CASE("character sums reproduce small Hurwitz numbers") {
  HurwitzSpec s;
  s.base_genus = 1;
  s.source_genus = 1;
  s.degree = 1;
  CHECK(hurwitz_by_characters(s) == 1);
  s.source_genus = 2;
  s.degree = 2;
  s.k = 2;
  CHECK(hurwitz_by_characters(s) == 2);
  HurwitzSpec t;
  t.degree = 2;
  t.profiles = {Partition({2}), Partition({2})};
  CHECK(hurwitz_by_characters(t) == Rational(1, 2));
  t.connected = true;
  CHECK_THROWS_AS(hurwitz_by_characters(t), DomainError);
}

TEST_CASE("character sums agree with enumeration for small degree") {
  const std::vector<std::vector<Partition>> profile_sets = {
      {}, {Partition({2})}, {Partition({3})}, {Partition({2}), Partition({2})}};
  int checked = 0;
  for (int d = 1; d <= 4; ++d)
    for (int g = 0; g <= 1; ++g)
      for (const auto& mu : profile_sets)
        for (int gp = 0; gp <= 3; ++gp) {
          HurwitzSpec s;
          s.base_genus = g;
          s.source_genus = gp;
          s.degree = d;
          s.profiles = mu;
          bool fits = true;
          for (const auto& p : mu) fits = fits && p.size() <= d;
          if (!fits) continue;
          int b = s.branch_count();
          if (b < 0 || b > 3) continue;
          for (int k = 0; k <= b; ++k)
            for (int l = 0; k + l <= b; ++l) {
              s.k = k;
              s.l = l;
              s.m = b - k - l;
              CHECK(hurwitz_by_characters(s) == count_triply_mixed(s));
              ++checked;
            }
        }
  CHECK(checked > 100);
}

TEST_CASE("commutator counts by characters") {
  CHECK(commutator_count_by_characters(1, Partition({1}), 1) == 1);
  CHECK(commutator_count_by_characters(1, Partition({1, 1}), 2) == 4);
  CHECK(commutator_count_by_characters(1, Partition({2}), 2) == 0);
  CHECK(commutator_count_by_characters(1, Partition({3}), 3) == 18);
  for (int g = 1; g <= 2; ++g)
    for (int d = 1; d <= 4; ++d)
      for (const auto& nu : enumerate_partitions(d))
        CHECK(commutator_count_by_characters(g, nu, d) == count_commutator_type(g, nu, d));
}

TEST_CASE("character table cache") {
  CharacterTable t(5);
  auto back = CharacterTable::from_json(t.to_json());
  for (const auto& lam : t.partitions())
    for (const auto& nu : t.partitions()) CHECK(back.at(lam, nu) == t.at(lam, nu));
  CHECK_THROWS_AS(CharacterTable::from_json(R"({"version":2,"degree":1,"entries":[]})"), DomainError);

  auto dir = std::filesystem::temp_directory_path() / "hurwitz_cache_test";
  std::filesystem::remove_all(dir);
  set_cache_dir(dir.string());
  const auto& fresh = character_table(9);
  CHECK(std::filesystem::exists(cache_file(9)));
  CHECK(fresh.at(Partition({9}), Partition({9})) == 1);
  set_cache_dir(std::nullopt);
  std::filesystem::remove_all(dir);
}
