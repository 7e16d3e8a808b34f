#include "hurwitz/potential.hpp"

#include "hurwitz/characters.hpp"

#include <algorithm>

namespace hurwitz {

bool PotentialKey::empty() const {
  if (k || l || m) return false;
  return std::all_of(profiles.begin(), profiles.end(), [](const Partition& p) { return p.without_ones().empty(); });
}

PotentialKey PotentialKey::canonical() const {
  PotentialKey c = *this;
  for (auto& p : c.profiles) p = p.without_ones();
  return c;
}

std::string PotentialKey::str() const {
  std::string s = "(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(m) + ") mu=(";
  for (std::size_t i = 0; i < profiles.size(); ++i) s += (i ? ";" : "") + profiles[i].str();
  return s + ")";
}

namespace {

std::vector<Partition> sub_multisets(const Partition& p) {
  auto mult = p.multiplicities();
  std::vector<std::pair<int, int>> items(mult.rbegin(), mult.rend());
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == items.size()) {
      out.emplace_back(cur);
      return;
    }
    for (int c = 0; c <= items[i].second; ++c) {
      cur.insert(cur.end(), c, items[i].first);
      rec(i + 1);
      cur.resize(cur.size() - c);
    }
  };
  rec(0);
  return out;
}

Partition multiset_difference(const Partition& a, const Partition& b) {
  auto ma = a.multiplicities();
  for (auto [part, mult] : b.multiplicities()) {
    if (ma[part] < mult) throw DomainError("not a sub-multiset");
    ma[part] -= mult;
  }
  std::vector<int> parts;
  for (auto it = ma.rbegin(); it != ma.rend(); ++it) parts.insert(parts.end(), it->second, it->first);
  return Partition(std::move(parts));
}

PotentialKey difference(const PotentialKey& a, const PotentialKey& b) {
  PotentialKey r;
  r.k = a.k - b.k;
  r.l = a.l - b.l;
  r.m = a.m - b.m;
  for (std::size_t i = 0; i < a.profiles.size(); ++i) r.profiles.push_back(multiset_difference(a.profiles[i], b.profiles[i]));
  return r;
}

}  // namespace

std::vector<PotentialKey> sub_keys(const PotentialKey& key) {
  PotentialKey c = key.canonical();
  std::vector<std::vector<Partition>> choices;
  for (const auto& p : c.profiles) choices.push_back(sub_multisets(p));
  std::vector<PotentialKey> out;
  std::vector<Partition> cur(c.profiles.size());
  std::function<void(std::size_t, int, int, int)> rec = [&](std::size_t i, int k, int l, int m) {
    if (i == choices.size()) {
      out.push_back(PotentialKey{k, l, m, cur});
      return;
    }
    for (const auto& s : choices[i]) {
      cur[i] = s;
      rec(i + 1, k, l, m);
    }
  };
  for (int k = 0; k <= c.k; ++k)
    for (int l = 0; l <= c.l; ++l)
      for (int m = 0; m <= c.m; ++m) rec(0, k, l, m);
  std::sort(out.begin(), out.end());
  return out;
}

SeriesFamily connected_series(const SeriesFamily& disconnected) {
  SeriesFamily canon;
  for (const auto& [key, s] : disconnected) canon.emplace(key.canonical(), s);

  // a = H*/k!, c = H/k!, and d a_e = sum_{e1+e2=e} d1 c_e1 a_e2.
  std::map<PotentialKey, std::vector<Rational>> a, c;
  auto get_a = [&](const PotentialKey& key) -> const std::vector<Rational>& {
    auto it = a.find(key);
    if (it != a.end()) return it->second;
    auto src = canon.find(key);
    if (src == canon.end()) throw DomainError("connected_series: missing disconnected series for " + key.str());
    std::vector<Rational> v;
    for (int d = 0; d <= src->second.high(); ++d) v.push_back(src->second.coeff(d) / factorial(key.k));
    if (!v.empty() && v[0] != (key.empty() ? 1 : 0))
      throw DomainError("connected_series: degree-0 term of " + key.str() + " must be " + (key.empty() ? "1" : "0"));
    return a.emplace(key, std::move(v)).first->second;
  };

  std::function<const std::vector<Rational>&(const PotentialKey&)> get_c =
      [&](const PotentialKey& key) -> const std::vector<Rational>& {
    auto it = c.find(key);
    if (it != c.end()) return it->second;
    const auto& ak = get_a(key);
    auto subs = sub_keys(key);
    int hi = static_cast<int>(ak.size()) - 1;
    for (const auto& k1 : subs) hi = std::min(hi, static_cast<int>(get_a(difference(key, k1)).size()) - 1);
    std::vector<Rational> out(hi + 1, Rational(0));
    for (int d = 1; d <= hi; ++d) {
      Rational s = 0;
      for (const auto& k1 : subs) {
        const auto& c1 = k1 == key ? out : get_c(k1);
        const auto& a2 = get_a(difference(key, k1));
        for (int d1 = 1; d1 < d; ++d1) s += d1 * c1[d1] * a2[d - d1];
      }
      out[d] = ak[d] - s / d;
    }
    return c.emplace(key, std::move(out)).first->second;
  };

  SeriesFamily result;
  for (const auto& [key, s] : canon) {
    const auto& cv = get_c(key);
    std::vector<Rational> h;
    for (const auto& x : cv) h.push_back(x * factorial(key.k));
    result.emplace(key, QSeries(s.var(), 0, std::move(h)));
  }
  return result;
}

Rational disconnected_number(int base_genus, const PotentialKey& key, int d, Route route, const OracleOptions& opts) {
  PotentialKey c = key.canonical();
  if (d == 0) return c.empty() ? 1 : 0;
  for (const auto& p : c.profiles)
    if (p.size() > d) return 0;
  HurwitzSpec spec;
  spec.base_genus = base_genus;
  spec.degree = d;
  spec.profiles = c.profiles;
  spec.k = c.k;
  spec.l = c.l;
  spec.m = c.m;
  try {
    spec.source_genus = source_genus_for(base_genus, d, c.profiles, c.branch_points());
  } catch (const DomainError&) {
    return 0;
  }
  return route == Route::characters ? hurwitz_by_characters(spec) : count_triply_mixed(spec, opts);
}

SeriesFamily disconnected_family(int base_genus, const PotentialKey& top, int qmax, Route route,
                                 const OracleOptions& opts) {
  SeriesFamily fam;
  for (const auto& key : sub_keys(top)) {
    fam.emplace(key, QSeries::from_function(0, qmax, [&](int d) {
      return disconnected_number(base_genus, key, d, route, opts);
    }));
  }
  return fam;
}

QSeries connected_hurwitz_series(int base_genus, const PotentialKey& key, int qmax, Route route,
                                 const OracleOptions& opts) {
  auto fam = disconnected_family(base_genus, key, qmax, route, opts);
  auto conn = connected_series(fam);
  return conn.at(key.canonical());
}

}  // namespace hurwitz
