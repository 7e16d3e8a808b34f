#include <doctest.h>

#include "hurwitz/potential.hpp"

using namespace hurwitz;

namespace {

// Connected count straight from the oracle, 0 when no connected cover exists.
Rational oracle_connected(int g, const PotentialKey& key, int d) {
  HurwitzSpec s;
  s.base_genus = g;
  s.degree = d;
  s.profiles = key.profiles;
  s.k = key.k;
  s.l = key.l;
  s.m = key.m;
  s.connected = true;
  for (const auto& p : key.profiles)
    if (p.size() > d) return 0;
  try {
    s.source_genus = source_genus_for(g, d, key.profiles, key.branch_points());
  } catch (const DomainError&) {
    return 0;
  }
  if (s.source_genus < 0) return 0;
  return count_triply_mixed(s);
}

}  // namespace

TEST_CASE("single family log round trip") {
  // e^{q + q^2/2 + q^3/6} - its log is the exponent again
  QSeries exponent("q", 0, {0, 1, Rational(1, 2), Rational(1, 6)});
  SeriesFamily fam{{PotentialKey{}, exponent.exp()}};
  auto conn = connected_series(fam);
  CHECK(conn.at(PotentialKey{}).agrees_with(exponent));
}

TEST_CASE("sub keys") {
  PotentialKey key{1, 0, 2, {Partition({2, 2}), Partition({3, 1})}};
  auto subs = sub_keys(key);
  // k: 2 choices, m: 3, (2,2): 3, (3): 2
  CHECK(subs.size() == 36);
  CHECK(std::find(subs.begin(), subs.end(), PotentialKey{0, 0, 0, {Partition(), Partition()}}) != subs.end());
}

TEST_CASE("connected numbers of torus covers") {
  auto s200 = connected_hurwitz_series(1, PotentialKey{2, 0, 0, {}}, 3);
  CHECK(s200.coeff(2) == 2);
  CHECK(s200.coeff(3) == 16);
  auto s020 = connected_hurwitz_series(1, PotentialKey{0, 2, 0, {}}, 3);
  CHECK(s020.coeff(3) == 13);
  auto s002 = connected_hurwitz_series(1, PotentialKey{0, 0, 2, {}}, 3);
  CHECK(s002.coeff(2) == 0);
  CHECK(s002.coeff(3) == 3);
}

TEST_CASE("missing sub-families are reported") {
  SeriesFamily fam{{PotentialKey{1, 0, 0, {}}, QSeries("q", 0, {0, 0, 1})}};
  CHECK_THROWS_AS(connected_series(fam), DomainError);
}

TEST_CASE("disconnected enumeration is the exponential of connected enumeration") {
  const std::vector<PotentialKey> keys = {
      {2, 0, 0, {}}, {0, 1, 1, {}}, {1, 0, 1, {Partition({2})}}, {0, 2, 0, {Partition({3})}}, {0, 0, 1, {Partition({2}), Partition({2})}}};
  for (int g = 0; g <= 1; ++g)
    for (const auto& key : keys) {
      int qmax = g == 0 ? 5 : 4;
      auto fam = disconnected_family(g, key, qmax, Route::oracle);
      auto conn = connected_series(fam);
      for (const auto& [k, series] : conn)
        for (int d = 1; d <= qmax; ++d) CHECK(series.coeff(d) == oracle_connected(g, k, d));
    }
}
