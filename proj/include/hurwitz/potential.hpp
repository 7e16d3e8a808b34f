#pragma once

#include "hurwitz/oracle.hpp"
#include "hurwitz/series.hpp"

#include <map>

namespace hurwitz {

// Index of one coefficient family of the Hurwitz potential: numbers of free,
// weakly and strictly monotone simple branch points and the profiles over the
// fixed branch points (1-parts ignored). The degree is the q-exponent.
struct PotentialKey {
  int k = 0, l = 0, m = 0;
  std::vector<Partition> profiles;

  int branch_points() const { return k + l + m; }
  bool empty() const;
  PotentialKey canonical() const;  // 1-parts stripped
  std::string str() const;
  friend bool operator==(const PotentialKey&, const PotentialKey&) = default;
  friend auto operator<=>(const PotentialKey&, const PotentialKey&) = default;
};

using SeriesFamily = std::map<PotentialKey, QSeries>;

// Every key obtained by lowering k, l, m and taking sub-multisets of each
// profile, including the key itself and the empty key.
std::vector<PotentialKey> sub_keys(const PotentialKey& key);

// Connected series from disconnected ones via log of the potential, in which
// free branch points carry u^k/k! and monotone ones v^l, w^m. Every key of the
// input is converted; a missing sub-key throws DomainError.
SeriesFamily connected_series(const SeriesFamily& disconnected);

enum class Route { characters, oracle };

// Disconnected series of every sub-key of `top` through q^qmax.
SeriesFamily disconnected_family(int base_genus, const PotentialKey& top, int qmax, Route route,
                                 const OracleOptions& opts = {});

// Disconnected number for one key and degree; zero when the Euler
// characteristic has the wrong parity or a profile does not fit.
Rational disconnected_number(int base_genus, const PotentialKey& key, int d, Route route,
                             const OracleOptions& opts = {});

// Connected generating series sum_d H_d q^d through q^qmax.
QSeries connected_hurwitz_series(int base_genus, const PotentialKey& key, int qmax, Route route = Route::characters,
                                 const OracleOptions& opts = {});

}  // namespace hurwitz
