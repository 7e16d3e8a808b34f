#include "hurwitz/tropical.hpp"

#include "hurwitz/quasimodular.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace hurwitz {

namespace {

using Series = std::vector<Rational>;  // coefficients of z^0..z^N

Series mul(const Series& a, const Series& b) {
  Series r(a.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < r.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// S(w z) = sinh(w z/2)/(w z/2) through z^N
Series S(int w, int N) {
  Series r(N + 1, Rational(0));
  for (int k = 0; k <= N; k += 2)
    r[k] = Rational(ipow(Integer(w), k)) / Rational(ipow(Integer(2), k) * factorial(k + 1));
  return r;
}

Series inverse(const Series& a) {
  Series r(a.size(), Rational(0));
  r[0] = 1 / a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    Rational s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += a[k] * r[n - k];
    r[n] = -s / a[0];
  }
  return r;
}

Integer aut_of_multiset(const std::vector<EllipticEdge>& edges) {
  Integer aut = 1;
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    aut *= factorial(static_cast<long>(j - i));
    i = j;
  }
  return aut;
}

bool connected_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  int roots = 0;
  for (int v = 0; v < n; ++v) roots += find(v) == v;
  return roots == 1;
}

// Calls f with every genus vector g (one entry per vertex) summing to `total`
// such that base[v] + 2 g[v] >= 1.
void distribute_genera(const std::vector<int>& base, int total, const std::function<void(const std::vector<int>&)>& f) {
  const int n = static_cast<int>(base.size());
  std::vector<int> g(n, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == n) {
      if (left == 0) f(g);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      if (base[v] + 2 * x < 1) continue;
      g[v] = x;
      rec(v + 1, left - x);
    }
  };
  rec(0, total);
}

Rational sign_for(Variant variant, const std::vector<int>& valences) {
  if (variant == Variant::monotone) return 1;
  int s = 0;
  for (int val : valences) s += 1 + val;
  return s % 2 == 0 ? 1 : -1;
}

void check_bounds(int g, int d, const TropicalBounds& bounds) {
  if (g < 2) throw DomainError("elliptic tropical covers need genus >= 2");
  if (d < 1) throw DomainError("degree must be positive");
  if (d > bounds.max_degree) throw ResourceError("tropical degree " + std::to_string(d) + " above bound");
  if (g > bounds.max_genus) throw ResourceError("tropical genus " + std::to_string(g) + " above bound");
}

// Multisets of edges from `cand` with total crossing degree in [d_low, d_high]
// and at most max_edges edges; f gets each sorted multiset and its degree.
void edge_multisets(const std::vector<EllipticEdge>& cand, int d_low, int d_high, int max_edges,
                    const std::function<void(const std::vector<EllipticEdge>&, int)>& f) {
  std::vector<EllipticEdge> chosen;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int deg) {
    if (deg >= d_low && !chosen.empty()) f(chosen, deg);
    if (static_cast<int>(chosen.size()) == max_edges) return;
    for (std::size_t i = start; i < cand.size(); ++i) {
      int add = cand[i].weight * cand[i].crossings();
      if (deg + add > d_high) continue;
      chosen.push_back(cand[i]);
      rec(i, deg + add);
      chosen.pop_back();
    }
  };
  rec(0, 0);
}

std::vector<EllipticEdge> candidates(int n, int d) {
  std::vector<EllipticEdge> cand;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k <= d; ++k)
        for (int w = 1; w <= d; ++w) {
          EllipticEdge e{a, b, k, w};
          if (w * e.crossings() <= d) cand.push_back(e);
        }
  std::sort(cand.begin(), cand.end());
  return cand;
}

}  // namespace

Rational gw_vertex_multiplicity(const Composition& x_plus, const Composition& x_minus, int vertex_genus, int lambda) {
  if (vertex_genus < 0) throw DomainError("negative vertex genus");
  const int expected = 2 * vertex_genus - 2 + static_cast<int>(x_plus.size() + x_minus.size());
  if (lambda != expected) throw DomainError("vertex data violate lambda = 2g - 2 + val");
  if (lambda < 1) throw DomainError("vertex multiplicity needs lambda >= 1");
  const int N = 2 * vertex_genus;
  Series prod = inverse(S(1, N));
  for (int x : x_plus) prod = mul(prod, S(x, N));
  for (int x : x_minus) prod = mul(prod, S(x, N));
  Rational total = 0;
  for (int g1 = 0; g1 <= vertex_genus; ++g1) total += c_coefficient(2 * (vertex_genus - g1)) * prod[2 * g1];
  return Rational(factorial(lambda - 1)) * total;
}

int TropicalCover::valence(int v) const {
  int val = 0;
  for (const auto& e : edges) val += (e.from == v) + (e.to == v);
  return val;
}

std::vector<int> TropicalCover::lambda() const {
  std::vector<int> out;
  for (int v = 0; v < vertices(); ++v) out.push_back(valence(v) + 2 * genera[v] - 2);
  return out;
}

int TropicalCover::genus() const {
  int g = static_cast<int>(edges.size()) - vertices() + 1;
  for (int x : genera) g += x;
  return g;
}

Composition TropicalCover::x_plus(int v) const {
  Composition out;
  for (const auto& e : edges)
    if (e.from == v) out.push_back(e.weight);
  return out;
}

Composition TropicalCover::x_minus(int v) const {
  Composition out;
  for (const auto& e : edges)
    if (e.to == v) out.push_back(e.weight);
  return out;
}

bool TropicalCover::balanced() const {
  for (int v = 0; v < vertices(); ++v) {
    auto p = x_plus(v), m = x_minus(v);
    if (p.empty() || m.empty()) return false;
    if (std::accumulate(p.begin(), p.end(), 0) != std::accumulate(m.begin(), m.end(), 0)) return false;
  }
  int deg = 0;
  for (const auto& e : edges) deg += e.weight * e.crossings();
  return deg == degree;
}

Rational cover_multiplicity(const TropicalCover& cover, Variant variant) {
  Rational m = 1;
  std::vector<int> valences;
  const auto lam = cover.lambda();
  for (int v = 0; v < cover.vertices(); ++v) {
    m *= gw_vertex_multiplicity(cover.x_plus(v), cover.x_minus(v), cover.genera[v], lam[v]);
    valences.push_back(cover.valence(v));
  }
  for (const auto& e : cover.edges) m *= e.weight;
  m /= Rational(cover.automorphisms * factorial(cover.vertices()));
  return sign_for(variant, valences) * m;
}

std::vector<TropicalCover> enumerate_elliptic_covers(int g, int d, const TropicalBounds& bounds) {
  check_bounds(g, d, bounds);
  std::vector<TropicalCover> out;
  for (int n = 1; n <= 2 * g - 2; ++n) {
    const auto cand = candidates(n, d);
    edge_multisets(cand, d, d, g + n - 1, [&](const std::vector<EllipticEdge>& edges, int) {
      TropicalCover c;
      c.degree = d;
      c.edges = edges;
      c.genera.assign(n, 0);
      if (!c.balanced()) return;
      std::vector<std::pair<int, int>> pairs;
      for (const auto& e : edges) pairs.emplace_back(e.from, e.to);
      if (!connected_graph(n, pairs)) return;
      const int h1 = static_cast<int>(edges.size()) - n + 1;
      if (h1 > g) return;
      std::vector<int> base;
      for (int v = 0; v < n; ++v) base.push_back(c.valence(v) - 2);
      c.automorphisms = aut_of_multiset(edges);
      distribute_genera(base, g - h1, [&](const std::vector<int>& genera) {
        c.genera = genera;
        out.push_back(c);
      });
    });
  }
  return out;
}

Rational tropical_elliptic_sum(Variant variant, int g, int d, const TropicalBounds& bounds) {
  Rational total = 0;
  for (const auto& c : enumerate_elliptic_covers(g, d, bounds)) total += cover_multiplicity(c, variant);
  return total;
}

int CombinatorialType::genus() const {
  int g = static_cast<int>(edges.size()) - vertices + 1;
  for (int x : genera) g += x;
  return g;
}

CombinatorialType type_of(const TropicalCover& cover) {
  CombinatorialType t;
  t.vertices = cover.vertices();
  t.genera = cover.genera;
  for (const auto& e : cover.edges) t.edges.emplace_back(e.from, e.to);
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

QSeries per_type_series(const CombinatorialType& type, Variant variant, int d_max) {
  const int n = type.vertices;
  const int g = type.genus();
  if (n < 1 || static_cast<int>(type.genera.size()) != n) throw DomainError("type needs one genus per vertex");
  if (g < 2) throw DomainError("type genus must be at least 2");
  if (n > 2 * g - 2) throw DomainError("type has more than 2g-2 vertices");
  for (auto [a, b] : type.edges)
    if (a < 0 || b < 0 || a >= n || b >= n) throw DomainError("type edge endpoint out of range");
  if (!connected_graph(n, type.edges)) throw DomainError("type graph is disconnected");
  for (int v = 0; v < n; ++v) {
    int val = 0;
    for (auto [a, b] : type.edges) val += (a == v) + (b == v);
    if (val + 2 * type.genera[v] - 2 < 1) throw DomainError("type vertex with lambda < 1");
  }
  if (d_max < 0) throw DomainError("negative truncation");

  // parallel classes of edges
  std::vector<std::pair<std::pair<int, int>, int>> classes;
  for (const auto& e : type.edges) {
    if (!classes.empty() && classes.back().first == e)
      ++classes.back().second;
    else
      classes.push_back({e, 1});
  }
  std::vector<Rational> coeffs(d_max + 1, Rational(0));
  std::vector<EllipticEdge> chosen;
  std::function<void(std::size_t, int, std::size_t, int)> rec = [&](std::size_t cls, int left, std::size_t start,
                                                                  int deg) {
    if (cls == classes.size()) {
      if (deg == 0) return;
      TropicalCover c;
      c.degree = deg;
      c.genera = type.genera;
      c.edges = chosen;
      std::sort(c.edges.begin(), c.edges.end());
      if (!c.balanced()) return;
      c.automorphisms = aut_of_multiset(c.edges);
      coeffs[deg] += cover_multiplicity(c, variant);
      return;
    }
    if (left == 0) {
      if (cls + 1 < classes.size())
        rec(cls + 1, classes[cls + 1].second, 0, deg);
      else
        rec(cls + 1, 0, 0, deg);
      return;
    }
    auto [a, b] = classes[cls].first;
    // options ordered by (winding, weight); a multiset is a nondecreasing run
    std::vector<std::pair<int, int>> options;
    for (int k = 0; k <= d_max; ++k)
      for (int w = 1; w <= std::max(d_max, 1); ++w) {
        EllipticEdge e{a, b, k, w};
        if (w * e.crossings() <= d_max) options.emplace_back(k, w);
      }
    for (std::size_t i = start; i < options.size(); ++i) {
      EllipticEdge e{a, b, options[i].first, options[i].second};
      int add = e.weight * e.crossings();
      if (deg + add > d_max) continue;
      chosen.push_back(e);
      rec(cls, left - 1, i, deg + add);
      chosen.pop_back();
    }
  };
  if (!classes.empty()) rec(0, classes[0].second, 0, 0);
  return QSeries("q", 0, std::move(coeffs));
}

std::vector<CombinatorialType> elliptic_types(int g, int d_max, const TropicalBounds& bounds) {
  std::set<CombinatorialType> types;
  for (int d = 1; d <= d_max; ++d)
    for (const auto& c : enumerate_elliptic_covers(g, d, bounds)) types.insert(type_of(c));
  return {types.begin(), types.end()};
}

namespace {

// Edge of a cover of the line: a cylinder with no vertex, an end coming in
// from the left, an end leaving to the right, or an inner edge a -> b.
struct LineEdge {
  enum Kind { cylinder, left, right, inner } kind;
  int a = -1, b = -1;
  int weight = 1;
  friend auto operator<=>(const LineEdge&, const LineEdge&) = default;
};

// Sweeps the vertices left to right. Edges crossing the current position are
// kept as (origin vertex or -1 for a left end, weight) with multiplicities.
class LineSweep {
 public:
  LineSweep(Variant variant, const Partition& mu, const Partition& nu, int b, int l, bool connected)
      : variant_(variant), nu_(nu), b_(b), l_(l), connected_(connected) {
    for (int w : mu) ++open_[{-1, w}];
  }

  Rational run() {
    vertex(0, 0);
    return total_;
  }

 private:
  using Open = std::map<std::pair<int, int>, int>;

  static int lambda_floor(int val) { return val >= 3 ? val - 2 : 2; }

  void vertex(int v, int used) {
    if (v == l_) {
      finish();
      return;
    }
    std::vector<std::pair<std::pair<int, int>, int>> classes(open_.begin(), open_.end());
    std::vector<int> take(classes.size(), 0);
    std::function<void(std::size_t, int, int)> choose = [&](std::size_t i, int sum, int count) {
      if (i == classes.size()) {
        if (count == 0) return;
        for (const auto& out : enumerate_partitions(sum)) {
          int val = count + out.length();
          if (used + lambda_floor(val) > b_) continue;
          apply(classes, take, out, v, +1);
          valences_.push_back(val);
          vertex(v + 1, used + lambda_floor(val));
          valences_.pop_back();
          apply(classes, take, out, v, -1);
        }
        return;
      }
      for (int t = 0; t <= classes[i].second; ++t) {
        take[i] = t;
        choose(i + 1, sum + t * classes[i].first.second, count + t);
      }
      take[i] = 0;
    };
    choose(0, 0, 0);
  }

  // Closes the chosen open edges at v and opens the parts of `out` from v
  // (sign +1), or undoes that (sign -1).
  void apply(const std::vector<std::pair<std::pair<int, int>, int>>& classes, const std::vector<int>& take,
             const Partition& out, int v, int sign) {
    if (sign > 0) {
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (!take[i]) continue;
        auto [origin, w] = classes[i].first;
        if ((open_[classes[i].first] -= take[i]) == 0) open_.erase(classes[i].first);
        for (int k = 0; k < take[i]; ++k)
          closed_.push_back(origin < 0 ? LineEdge{LineEdge::left, -1, v, w} : LineEdge{LineEdge::inner, origin, v, w});
      }
      for (int w : out) ++open_[{v, w}];
    } else {
      for (int w : out)
        if (--open_[{v, w}] == 0) open_.erase({v, w});
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (!take[i]) continue;
        open_[classes[i].first] += take[i];
        closed_.resize(closed_.size() - take[i]);
      }
    }
  }

  void finish() {
    std::vector<int> right;
    for (const auto& [key, c] : open_)
      for (int k = 0; k < c; ++k) right.push_back(key.second);
    if (Partition::from_unsorted(right) != nu_) return;

    std::vector<LineEdge> edges = closed_;
    int cylinders = 0;
    Rational weights = 1;
    for (const auto& [key, c] : open_)
      for (int k = 0; k < c; ++k) {
        if (key.first < 0) {
          edges.push_back({LineEdge::cylinder, -1, -1, key.second});
          ++cylinders;
          weights /= key.second;
        } else {
          edges.push_back({LineEdge::right, key.first, -1, key.second});
        }
      }
    std::vector<std::pair<int, int>> links;
    for (const auto& e : edges)
      if (e.kind == LineEdge::inner) {
        links.emplace_back(e.a, e.b);
        weights *= e.weight;
      }
    if (connected_ && (l_ == 0 ? cylinders != 1 : (cylinders != 0 || !connected_graph(l_, links)))) return;

    std::vector<int> base;
    int used = 0;
    for (int val : valences_) {
      base.push_back(val - 2);
      used += val - 2;
    }
    const int rest = b_ - used;
    if (rest < 0 || rest % 2) return;

    std::sort(edges.begin(), edges.end());
    Integer aut = 1;
    for (std::size_t i = 0; i < edges.size();) {
      std::size_t j = i;
      while (j < edges.size() && edges[j] == edges[i]) ++j;
      aut *= factorial(static_cast<long>(j - i));
      i = j;
    }
    std::vector<Composition> xp(l_), xm(l_);
    for (const auto& e : edges) {
      if (e.kind == LineEdge::right || e.kind == LineEdge::inner) xp[e.a].push_back(e.weight);
      if (e.kind == LineEdge::left || e.kind == LineEdge::inner) xm[e.b].push_back(e.weight);
    }
    const Rational sign = sign_for(variant_, valences_);
    distribute_genera(base, rest / 2, [&](const std::vector<int>& genera) {
      Rational m = weights / Rational(aut * factorial(l_));
      for (int v = 0; v < l_; ++v) m *= gw_vertex_multiplicity(xp[v], xm[v], genera[v], base[v] + 2 * genera[v]);
      total_ += sign * m;
    });
  }

  Variant variant_;
  Partition nu_;
  int b_, l_;
  bool connected_;
  Open open_;
  std::vector<LineEdge> closed_;
  std::vector<int> valences_;
  Rational total_ = 0;
};

}  // namespace

Rational tropical_double_sum(Variant variant, int g, const Partition& mu, const Partition& nu, bool connected,
                             const TropicalBounds& bounds) {
  if (mu.size() != nu.size()) throw DomainError("tropical_double_sum: |mu| != |nu|");
  const int d = mu.size();
  if (d < 1) throw DomainError("degree must be positive");
  if (d > bounds.max_degree) throw ResourceError("tropical degree " + std::to_string(d) + " above bound");
  const int b = 2 * g - 2 + mu.length() + nu.length();
  if (b < 0) return 0;
  if (b > 2 * bounds.max_degree) throw ResourceError("too many branch points for the tropical bounds");
  if (b == 0) return LineSweep(variant, mu, nu, 0, 0, connected).run();
  Rational total = 0;
  for (int l = 1; l <= b; ++l) total += LineSweep(variant, mu, nu, b, l, connected).run();
  return total;
}

}  // namespace hurwitz
