#include "hurwitz/double_recursion.hpp"

#include "hurwitz/characters.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/potential.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace hurwitz {

namespace {

int total(const Composition& c) {
  int s = 0;
  for (int x : c) s += x;
  return s;
}

Composition sorted(Composition c) {
  std::sort(c.begin(), c.end());
  return c;
}

class NRecursion {
 public:
  NRecursion(Variant variant, InnerBound bound) : variant_(variant), bound_(bound) {}

  Integer N(int b, int part, const Composition& rest, int l, const Composition& nu) {
    if (b < 0 || nu.empty() || l < 1 || l > nu.back()) return 0;
    if (part + total(rest) != total(nu)) return 0;
    Key key{b, part, rest, l, nu};
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    Integer value = compute(b, part, rest, l, nu);
    std::lock_guard lock(mutex_);
    memo_.emplace(std::move(key), value);
    return value;
  }

 private:
  using Key = std::tuple<int, int, Composition, int, Composition>;

  Integer compute(int b, int part, const Composition& rest, int l, const Composition& nu) {
    if (b <= 1) {
      Composition mu{part};
      mu.insert(mu.end(), rest.begin(), rest.end());
      return oracle_N_b(variant_, b, mu, 0, l, nu);
    }
    const bool strict = variant_ == Variant::strict;
    const int up = strict ? l - 1 : l;
    const int n = static_cast<int>(nu.size());
    const int r = static_cast<int>(rest.size());
    Integer acc = 0;

    // cut, gated by Theta(part + l - nu_last - 1)
    if (part + l - nu.back() - 1 >= 0)
      for (int j = 0; j < r; ++j) {
        Composition others = rest;
        others.erase(others.begin() + j);
        acc += partial_sum(b - 1, part + rest[j], others, up, nu);
      }

    for (int a = 1; a < part; ++a) {
      const int beta = part - a;
      // redundant join
      Composition grown = rest;
      grown.push_back(beta);
      acc += beta * partial_sum(b - 1, a, sorted(grown), up, nu);

      // essential join: the beta cycle closes off a component carrying rest|I2 and nu_J
      for (int mask = 0; mask < (1 << r); ++mask) {
        Composition i1, i2;
        for (int k = 0; k < r; ++k) (mask >> k & 1 ? i1 : i2).push_back(rest[k]);
        const int need = beta + total(i2);
        for (int jm = 1; jm < (1 << (n - 1)); ++jm) {
          Composition nu_j, nu_a;
          for (int k = 0; k < n; ++k) (k < n - 1 && (jm >> k & 1) ? nu_j : nu_a).push_back(nu[k]);
          if (total(nu_j) != need) continue;
          Composition mu_j{beta};
          mu_j.insert(mu_j.end(), i2.begin(), i2.end());
          for (int b1 = 0; b1 < b; ++b1) {
            Integer left = partial_sum(b1, a, i1, up, nu_a);
            if (left == 0) continue;
            acc += beta * left * all_slots(b - 1 - b1, mu_j, nu_j);
          }
        }
      }
    }
    return acc;
  }

  // sum_{p <= up} N(b, part, rest, p, nu); at b = 0 a single cycle counts once
  Integer partial_sum(int b, int part, const Composition& rest, int up, const Composition& nu) {
    if (b == 0) return (nu.size() == 1 && rest.empty() && part == nu[0]) ? 1 : 0;
    Integer s = 0;
    for (int p = 1; p <= std::min(up, nu.back()); ++p) s += N(b, part, rest, p, nu);
    return s;
  }

  // Sum over the distinguished slot of mu and every counter value.
  Integer all_slots(int b, const Composition& mu, const Composition& nu) {
    if (b == 0) return (nu.size() == 1 && mu.size() == 1 && mu[0] == nu[0]) ? 1 : 0;
    int top = nu.back();
    if (variant_ == Variant::strict && bound_ == InnerBound::largest_part) top = *std::max_element(nu.begin(), nu.end());
    Integer s = 0;
    for (std::size_t k = 0; k < mu.size(); ++k) {
      Composition rest = mu;
      rest.erase(rest.begin() + static_cast<long>(k));
      rest = sorted(rest);
      for (int p = 1; p <= top; ++p) s += N(b, mu[k], rest, p, nu);
    }
    return s;
  }

  Variant variant_;
  InnerBound bound_;
  std::mutex mutex_;
  std::map<Key, Integer> memo_;
};

NRecursion& recursion(Variant variant, InnerBound bound) {
  static NRecursion mono(Variant::monotone, InnerBound::last_label), mono2(Variant::monotone, InnerBound::largest_part),
      strict(Variant::strict, InnerBound::last_label), strict2(Variant::strict, InnerBound::largest_part);
  if (variant == Variant::monotone) return bound == InnerBound::last_label ? mono : mono2;
  return bound == InnerBound::last_label ? strict : strict2;
}

// b for a connected double number, or -1 when no genus fits.
int connected_branch_count(int g, const Partition& mu, const Partition& nu) {
  return 2 * g - 2 + mu.length() + nu.length();
}

Rational connected_double_b(Variant variant, int b, const Partition& mu, const Partition& nu) {
  int twice_g = b + 2 - mu.length() - nu.length();
  if (twice_g < 0 || twice_g % 2) return 0;
  return double_hurwitz(variant, twice_g / 2, mu, nu);
}

// Disconnected double numbers of degree d with at most b_max branch points.
using DoubleTable = std::map<std::tuple<Partition, Partition, int>, Rational>;

Partition merged(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.begin(), b.end());
  return Partition::from_unsorted(parts);
}

const DoubleTable& disconnected_table(Variant variant, int d, int b_max) {
  static std::mutex m;
  static std::map<std::tuple<Variant, int, int>, std::vector<DoubleTable>> cache;
  std::lock_guard lock(m);
  auto it = cache.find({variant, d, b_max});
  if (it != cache.end()) return it->second.back();

  std::vector<DoubleTable> conn(d + 1), disc(d + 1);
  for (int k = 1; k <= d; ++k)
    for (const auto& mu : enumerate_partitions(k))
      for (const auto& nu : enumerate_partitions(k))
        for (int b = 0; b <= b_max; ++b) {
          Rational h = connected_double_b(variant, b, mu, nu);
          if (h != 0) conn[k].emplace(std::tuple{mu, nu, b}, h);
        }
  disc[0].emplace(std::tuple{Partition(), Partition(), 0}, Rational(1));
  // d D_d = sum_k k C_k D_{d-k}
  for (int e = 1; e <= d; ++e) {
    for (int k = 1; k <= e; ++k)
      for (const auto& [ck, cv] : conn[k])
        for (const auto& [dk, dv] : disc[e - k]) {
          int b = std::get<2>(ck) + std::get<2>(dk);
          if (b > b_max) continue;
          disc[e][{merged(std::get<0>(ck), std::get<0>(dk)), merged(std::get<1>(ck), std::get<1>(dk)), b}] +=
              Rational(k) * cv * dv;
        }
    for (auto& [key, v] : disc[e]) v /= e;
  }
  return cache.emplace(std::tuple{variant, d, b_max}, std::move(disc)).first->second.back();
}

}  // namespace

int NKey::branch_count() const { return 2 * g - 1 + static_cast<int>(rest.size()) + static_cast<int>(nu.size()); }

Integer N_value_b(Variant variant, int b, int part, const Composition& rest, int l, const Composition& nu,
                  InnerBound bound) {
  if (nu.empty() || part < 1) throw DomainError("N_value: empty profile");
  for (int x : rest)
    if (x < 1) throw DomainError("N_value: parts must be positive");
  for (int x : nu)
    if (x < 1) throw DomainError("N_value: parts must be positive");
  if (part + total(rest) != total(nu)) throw DomainError("N_value: |mu| != |nu|");
  if (l < 1 || l > nu.back()) throw DomainError("N_value: counter l out of range");
  return recursion(variant, bound).N(b, part, sorted(rest), l, nu);
}

Integer N_value(const NKey& key, InnerBound bound) {
  if (key.g < 0) throw DomainError("N_value: negative genus");
  return N_value_b(key.variant, key.branch_count(), key.part, key.rest, key.l, key.nu, bound);
}

Rational double_hurwitz(Variant variant, int g, const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size()) throw DomainError("double_hurwitz: |mu| != |nu|");
  if (mu.empty()) throw DomainError("double_hurwitz: degree must be positive");
  const int b = connected_branch_count(g, mu, nu);
  if (g < 0 || b < 0) return 0;
  const int d = mu.size();
  const Composition nu_c = nu.parts();
  Integer s = 0;
  for (int i = 0; i < mu.length(); ++i) {
    Composition rest = mu.parts();
    rest.erase(rest.begin() + i);
    for (int l = 1; l <= nu_c.back(); ++l) s += N_value_b(variant, b, mu[i], rest, l, nu_c);
  }
  return Rational(class_size(nu, d) * s) / Rational(factorial(d) * aut_count(mu));
}

Rational disconnected_double_hurwitz(Variant variant, int b, const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size()) throw DomainError("disconnected_double_hurwitz: |mu| != |nu|");
  if (b < 0) return 0;
  const auto& table = disconnected_table(variant, mu.size(), b);
  auto it = table.find({mu, nu, b});
  return it == table.end() ? Rational(0) : it->second;
}

Rational base_g_assembly(Variant variant, int base_genus, int b, const Partition& mu, int d) {
  if (base_genus < 1) throw DomainError("base_g_assembly needs base genus >= 1");
  if (d < 0 || b < 0) throw DomainError("base_g_assembly: negative degree or branch count");
  if (d == 0) return (b == 0 && mu.empty()) ? 1 : 0;
  if (mu.size() > d) return 0;
  const Partition target = mu.padded(d);
  const auto& table = disconnected_table(variant, d, b);
  Rational acc = 0;
  for (const auto& nu : enumerate_partitions(d)) {
    auto it = table.find({target, nu, b});
    if (it == table.end()) continue;
    acc += it->second * Rational(commutator_count_by_characters(base_genus, nu, d)) / Rational(class_size(nu, d));
  }
  return acc;
}

QSeries base_g_connected_series(Variant variant, int base_genus, int b, const Partition& mu, int qmax) {
  PotentialKey top;
  (variant == Variant::monotone ? top.l : top.m) = b;
  if (!mu.without_ones().empty()) top.profiles.push_back(mu.without_ones());
  SeriesFamily fam;
  for (const auto& key : sub_keys(top)) {
    Partition profile = key.profiles.empty() ? Partition() : key.profiles[0];
    fam.emplace(key, QSeries::from_function(0, qmax, [&](int d) {
      return base_g_assembly(variant, base_genus, key.branch_points(), profile, d);
    }));
  }
  return connected_series(fam).at(top.canonical());
}

}  // namespace hurwitz
