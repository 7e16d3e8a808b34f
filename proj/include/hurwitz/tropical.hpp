#pragma once

#include "hurwitz/hurwitz_spec.hpp"
#include "hurwitz/numeric.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/series.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace hurwitz {

struct TropicalBounds {
  int max_degree = 8;
  int max_genus = 4;
};

// (lambda - 1)! sum_{g1+g2=g(v)} c_{2 g2} [z^{2 g1}] prod S(x_i z) / S(z) with
// S(z) = sinh(z/2)/(z/2), x running over both sides. Throws DomainError
// unless lambda = 2g(v) - 2 + len(x+) + len(x-) >= 1.
Rational gw_vertex_multiplicity(const Composition& x_plus, const Composition& x_minus, int vertex_genus, int lambda);

// Edge of a cover of the circle. It leaves vertex `from` in the positive
// direction and arrives at `to` after passing the base point `crossings()`
// times. Vertex i sits over the i-th marked point.
struct EllipticEdge {
  int from = 0, to = 0;
  int winding = 0;
  int weight = 1;

  int crossings() const { return winding + (from >= to ? 1 : 0); }
  friend auto operator<=>(const EllipticEdge&, const EllipticEdge&) = default;
};

struct TropicalCover {
  int degree = 0;
  std::vector<int> genera;  // one per vertex
  std::vector<EllipticEdge> edges;  // sorted
  Integer automorphisms = 1;

  int vertices() const { return static_cast<int>(genera.size()); }
  int valence(int v) const;
  // val(v) + 2g(v) - 2 per vertex
  std::vector<int> lambda() const;
  int genus() const;
  // Outgoing and incoming weights at v.
  Composition x_plus(int v) const;
  Composition x_minus(int v) const;
  bool balanced() const;
};

// 1/|Aut| 1/n! prod m_v prod w_e, with the sign prod (-1)^{1+val(v)} for the
// strict variant.
Rational cover_multiplicity(const TropicalCover& cover, Variant variant);

// Every cover of genus g >= 2 and degree d of the circle with at most 2g-2
// vertices, each vertex with lambda >= 1.
std::vector<TropicalCover> enumerate_elliptic_covers(int g, int d, const TropicalBounds& bounds = {});

Rational tropical_elliptic_sum(Variant variant, int g, int d, const TropicalBounds& bounds = {});

// Graph, vertex order (vertex i over the i-th point) and genera of a cover.
struct CombinatorialType {
  int vertices = 1;
  std::vector<std::pair<int, int>> edges;  // (from, to), sorted
  std::vector<int> genera;

  int genus() const;
  friend auto operator<=>(const CombinatorialType&, const CombinatorialType&) = default;
};

CombinatorialType type_of(const TropicalCover& cover);

// sum of mult q^deg over the covers of one type through q^d_max. Throws
// DomainError for a type that is disconnected, has a vertex with
// lambda < 1, genus below 2 or more than 2g-2 vertices.
QSeries per_type_series(const CombinatorialType& type, Variant variant, int d_max);

// Every type that occurs in genus g up to degree d_max.
std::vector<CombinatorialType> elliptic_types(int g, int d_max, const TropicalBounds& bounds = {});

// Tropical count of covers of the line with ends mu on the left, nu on the
// right and b = 2g-2+len(mu)+len(nu) vertices' worth of lambda. Components
// without vertices are cylinders of weight w counted with 1/w. With
// connected = false this is the disconnected number, g being read off from b.
Rational tropical_double_sum(Variant variant, int g, const Partition& mu, const Partition& nu, bool connected = false,
                             const TropicalBounds& bounds = {});

}  // namespace hurwitz
