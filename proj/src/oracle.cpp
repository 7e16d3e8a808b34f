#include "hurwitz/oracle.hpp"

#include <functional>
#include <map>
#include <thread>
#include <unordered_map>

namespace hurwitz {

namespace {

struct PairKey {
  std::uint64_t perm, orbits;
  bool operator==(const PairKey&) const = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    return std::hash<std::uint64_t>()(k.perm * 0x9E3779B97F4A7C15ULL ^ k.orbits);
  }
};

using Histogram = std::unordered_map<PairKey, Integer, PairKeyHash>;

void check_degree(int d, const OracleOptions& opts) {
  if (d < 1) throw DomainError("degree must be positive");
  if (d > opts.max_degree || d > kMaxDegree)
    throw ResourceError("degree " + std::to_string(d) + " above oracle limit " + std::to_string(opts.max_degree));
}

// Runs body(worker) on opts.jobs threads and waits.
void run_workers(unsigned jobs, const std::function<void(unsigned)>& body) {
  if (jobs <= 1) {
    body(0);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(body, w);
  for (auto& t : pool) t.join();
}

void merge_into(Histogram& dst, const Histogram& src) {
  for (const auto& [k, v] : src) dst[k] += v;
}

std::map<Partition, std::vector<Permutation>> classes_of(int d) {
  std::map<Partition, std::vector<Permutation>> out;
  for (const auto& p : all_permutations(d)) out[p.cycle_type()].push_back(p);
  return out;
}

bool admissible(Monotonicity mono, bool block_start, int prev_t, int t) {
  if (mono == Monotonicity::free || block_start) return true;
  return mono == Monotonicity::weak ? t >= prev_t : t > prev_t;
}

// Histogram of (product, orbit partition) over the left-hand tuples
// sigma_1 .. sigma_n tau_1 .. tau_b.
struct LeftSide {
  int d;
  std::vector<const std::vector<Permutation>*> sigma_choices;
  std::vector<Monotonicity> tau_mono;
  std::vector<bool> tau_block_start;
  bool track_orbits;
  std::vector<Transposition> ts;
  std::vector<Permutation> tperm;

  int positions() const { return static_cast<int>(sigma_choices.size() + tau_mono.size()); }

  int choices_at(int pos) const {
    int n = static_cast<int>(sigma_choices.size());
    return pos < n ? static_cast<int>(sigma_choices[pos]->size()) : static_cast<int>(ts.size());
  }

  void walk(int pos, const Permutation& P, const OrbitPartition& O, int prev_t, unsigned stride, unsigned offset,
            Histogram& h) const {
    if (pos == positions()) {
      h[PairKey{P.key(), track_orbits ? O.key() : 0}] += 1;
      return;
    }
    int n = static_cast<int>(sigma_choices.size());
    int count = choices_at(pos);
    for (int c = 0; c < count; ++c) {
      if (pos == 0 && static_cast<unsigned>(c) % stride != offset) continue;
      if (pos < n) {
        const Permutation& s = (*sigma_choices[pos])[c];
        OrbitPartition O2 = O;
        if (track_orbits) O2.absorb(s);
        walk(pos + 1, P * s, O2, prev_t, stride, offset, h);
      } else {
        int j = pos - n;
        const Transposition& tr = ts[c];
        if (!admissible(tau_mono[j], tau_block_start[j], prev_t, tr.t)) continue;
        OrbitPartition O2 = O;
        if (track_orbits) O2.merge(tr.s, tr.t);
        walk(pos + 1, P * tperm[c], O2, tr.t, stride, offset, h);
      }
    }
  }
};

// Histogram of (product of g commutators, orbit partition of all entries).
Histogram commutator_histogram(int d, int g, bool track_orbits, unsigned jobs) {
  Histogram acc;
  Permutation id(d);
  acc[PairKey{id.key(), track_orbits ? OrbitPartition(d).key() : 0}] = 1;
  if (g == 0) return acc;

  auto perms = all_permutations(d);
  std::vector<Histogram> parts(std::max(1u, jobs));
  run_workers(jobs, [&](unsigned w) {
    for (std::size_t a = w; a < perms.size(); a += std::max(1u, jobs)) {
      for (const auto& beta : perms) {
        const auto& alpha = perms[a];
        std::uint64_t ok = 0;
        if (track_orbits) {
          OrbitPartition O(d);
          O.absorb(alpha);
          O.absorb(beta);
          ok = O.key();
        }
        parts[w][PairKey{commutator(alpha, beta).key(), ok}] += 1;
      }
    }
  });
  Histogram one;
  for (const auto& p : parts) merge_into(one, p);

  auto perm_from_key = [d](std::uint64_t key) {
    std::vector<int> img(d);
    for (int i = 0; i < d; ++i) img[i] = static_cast<int>((key >> (4 * i)) & 0xF);
    return Permutation::from_one_line(img);
  };

  for (int h = 0; h < g; ++h) {
    Histogram next;
    for (const auto& [k1, v1] : acc) {
      Permutation c1 = perm_from_key(k1.perm);
      OrbitPartition o1 = OrbitPartition::from_key(d, k1.orbits);
      for (const auto& [k2, v2] : one) {
        std::uint64_t ok = 0;
        if (track_orbits) {
          OrbitPartition o = o1;
          o.absorb(OrbitPartition::from_key(d, k2.orbits));
          ok = o.key();
        }
        next[PairKey{(c1 * perm_from_key(k2.perm)).key(), ok}] += v1 * v2;
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

std::vector<Transposition> transpositions(int d) {
  std::vector<Transposition> out;
  for (int t = 1; t < d; ++t)
    for (int s = 0; s < t; ++s) out.push_back({s, t});
  return out;
}

Integer count_triply_mixed_tuples(const HurwitzSpec& spec, const OracleOptions& opts) {
  spec.validate();
  const int d = spec.degree;
  check_degree(d, opts);
  unsigned jobs = std::max(1u, opts.jobs);

  auto classes = classes_of(d);
  std::vector<Partition> padded;
  for (const auto& mu : spec.profiles) padded.push_back(mu.padded(d));

  LeftSide left{d, {}, {}, {}, spec.connected, transpositions(d), {}};
  for (const auto& p : padded) left.sigma_choices.push_back(&classes.at(p));
  for (const auto& tr : left.ts) left.tperm.push_back(Permutation::transposition(d, tr.s, tr.t));
  auto add_block = [&](int len, Monotonicity mono) {
    for (int j = 0; j < len; ++j) {
      left.tau_mono.push_back(mono);
      left.tau_block_start.push_back(j == 0);
    }
  };
  add_block(spec.k, Monotonicity::free);
  add_block(spec.l, Monotonicity::weak);
  add_block(spec.m, Monotonicity::strict);

  Histogram lh;
  if (left.positions() == 0) {
    lh[PairKey{Permutation(d).key(), spec.connected ? OrbitPartition(d).key() : 0}] = 1;
  } else {
    std::vector<Histogram> parts(jobs);
    run_workers(jobs, [&](unsigned w) {
      left.walk(0, Permutation(d), OrbitPartition(d), -1, jobs, w, parts[w]);
    });
    for (const auto& p : parts) merge_into(lh, p);
  }

  Histogram rh = commutator_histogram(d, spec.base_genus, spec.connected, jobs);
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::uint64_t, Integer>>> by_perm;
  for (const auto& [k, v] : rh) by_perm[k.perm].emplace_back(k.orbits, v);

  Integer total = 0;
  for (const auto& [k, v] : lh) {
    auto it = by_perm.find(k.perm);
    if (it == by_perm.end()) continue;
    for (const auto& [orb, cnt] : it->second) {
      if (spec.connected) {
        OrbitPartition o = OrbitPartition::from_key(d, k.orbits);
        o.absorb(OrbitPartition::from_key(d, orb));
        if (!o.transitive()) continue;
      }
      total += v * cnt;
    }
  }
  return total;
}

Rational count_triply_mixed(const HurwitzSpec& spec, const OracleOptions& opts) {
  Integer tuples = count_triply_mixed_tuples(spec, opts);
  Rational r = make_rational(tuples, factorial(spec.degree));
  if (spec.labeled)
    for (const auto& mu : spec.profiles) r *= aut_count(mu.padded(spec.degree));
  return r;
}

namespace {

int distance(const Permutation& a, const Permutation& b) {
  return a.degree() - static_cast<int>((a.inverse() * b).cycles().size());
}

}  // namespace

Integer count_monotone_of_fixed_target(const Partition& mu, int b, bool strict, const OracleOptions& opts) {
  const int d = mu.size();
  if (b < 0 || b < mu.length() + d - 2 || (b - mu.length() - d) % 2 != 0)
    throw DomainError("b = " + std::to_string(b) + " is not 2g-2+n+|mu| for any g >= 0");
  check_degree(d, opts);
  const Permutation target = Permutation::standard(mu.parts());
  const auto ts = transpositions(d);
  std::vector<Permutation> tperm;
  for (const auto& tr : ts) tperm.push_back(Permutation::transposition(d, tr.s, tr.t));

  Integer count = 0;
  std::function<void(int, const Permutation&, const OrbitPartition&, int)> walk =
      [&](int pos, const Permutation& P, const OrbitPartition& O, int prev_t) {
        if (distance(P, target) > b - pos) return;
        if (pos == b) {
          if (P == target && O.transitive()) count += 1;
          return;
        }
        for (std::size_t c = 0; c < ts.size(); ++c) {
          if (pos > 0 && (strict ? ts[c].t <= prev_t : ts[c].t < prev_t)) continue;
          OrbitPartition O2 = O;
          O2.merge(ts[c].s, ts[c].t);
          walk(pos + 1, P * tperm[c], O2, ts[c].t);
        }
      };
  OrbitPartition start(d);
  start.absorb(target);
  walk(0, Permutation(d), start, -1);
  return count;
}

Integer oracle_N_b(Variant variant, int b, const Composition& mu, int i, int l, const Composition& nu,
                   const OracleOptions& opts) {
  int d = 0, dm = 0;
  for (int x : nu) d += x;
  for (int x : mu) dm += x;
  if (mu.empty() || nu.empty()) throw DomainError("oracle_N needs nonempty mu and nu");
  if (d != dm) throw DomainError("oracle_N: |mu| != |nu|");
  if (i < 0 || i >= static_cast<int>(mu.size())) throw DomainError("oracle_N: index i out of range");
  if (l < 1 || l > nu.back()) throw DomainError("oracle_N: counter l out of range");
  if (b < 0) return 0;
  check_degree(d, opts);

  if (b == 0) return (nu.size() == 1 && mu.size() == 1 && mu[0] == nu[0] && l == nu.back()) ? 1 : 0;

  const bool strict = variant == Variant::strict;
  const int tb = d - nu.back() + l - 1;  // zero based
  const Partition target_type = Partition::from_unsorted(mu);
  const Permutation sigma = Permutation::standard(nu);
  const auto ts = transpositions(d);

  Composition rest = mu;
  rest.erase(rest.begin() + i);
  const Integer labels = aut_count(rest);

  Integer count = 0;
  std::function<void(int, const Permutation&, const OrbitPartition&, int)> walk =
      [&](int pos, const Permutation& P, const OrbitPartition& O, int prev_t) {
        if (pos == b) {
          if (!O.transitive() || P.cycle_type() != target_type) return;
          auto idx = P.cycle_index();
          int len = 0;
          for (int x = 0; x < d; ++x)
            if (idx[x] == idx[tb]) ++len;
          if (len == mu[i]) count += labels;
          return;
        }
        for (const auto& tr : ts) {
          if (tr.t > tb) break;
          if (pos > 0 && (strict ? tr.t <= prev_t : tr.t < prev_t)) continue;
          if (pos == b - 1 && tr.t != tb) continue;
          OrbitPartition O2 = O;
          O2.merge(tr.s, tr.t);
          walk(pos + 1, Permutation::transposition(d, tr.s, tr.t) * P, O2, tr.t);
        }
      };
  OrbitPartition start(d);
  start.absorb(sigma);
  walk(0, sigma, start, -1);
  return count;
}

Integer oracle_N(Variant variant, int g, const Composition& mu, int i, int l, const Composition& nu,
                 const OracleOptions& opts) {
  if (g < 0) throw DomainError("negative genus");
  int b = 2 * g - 2 + static_cast<int>(mu.size() + nu.size());
  return oracle_N_b(variant, b, mu, i, l, nu, opts);
}

Integer count_commutator_type(int g, const Partition& nu, int d, const OracleOptions& opts) {
  if (g < 1) throw DomainError("count_commutator_type needs g >= 1");
  check_degree(d, opts);
  Partition target = nu.padded(d);
  Histogram h = commutator_histogram(d, g, false, std::max(1u, opts.jobs));
  Integer total = 0;
  for (const auto& [k, v] : h) {
    std::vector<int> img(d);
    for (int x = 0; x < d; ++x) img[x] = static_cast<int>((k.perm >> (4 * x)) & 0xF);
    if (Permutation::from_one_line(img).cycle_type() == target) total += v;
  }
  return total;
}

Integer count_transposition_sequences(int d, int b, Monotonicity mono, const OracleOptions& opts) {
  if (b < 0) throw DomainError("negative sequence length");
  check_degree(d, opts);
  const auto ts = transpositions(d);
  if (mono == Monotonicity::free) return ipow(Integer(static_cast<unsigned long>(ts.size())), b);
  // ways[t] = sequences so far ending with larger point t
  std::vector<Integer> ways(d, 0);
  Integer total = b == 0 ? 1 : 0;
  for (int pos = 0; pos < b; ++pos) {
    std::vector<Integer> next(d, 0);
    for (int t = 1; t < d; ++t) {
      Integer prefix = pos == 0 ? Integer(1) : Integer(0);
      if (pos > 0)
        for (int u = 1; u < d; ++u)
          if (mono == Monotonicity::weak ? u <= t : u < t) prefix += ways[u];
      next[t] = prefix * t;
    }
    ways = std::move(next);
  }
  if (b > 0)
    for (int t = 1; t < d; ++t) total += ways[t];
  return total;
}

Rational oracle_double_hurwitz(Variant variant, int g, const Partition& mu, const Partition& nu, bool connected,
                               const OracleOptions& opts) {
  if (mu.size() != nu.size()) throw DomainError("double Hurwitz numbers need |mu| = |nu|");
  HurwitzSpec spec;
  spec.base_genus = 0;
  spec.source_genus = g;
  spec.degree = mu.size();
  spec.profiles = {mu, nu};
  spec.connected = connected;
  int b = spec.branch_count();
  if (b < 0) throw DomainError("negative number of simple branch points");
  (variant == Variant::monotone ? spec.l : spec.m) = b;
  return count_triply_mixed(spec, opts);
}

}  // namespace hurwitz
