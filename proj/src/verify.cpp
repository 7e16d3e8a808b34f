#include "hurwitz/verify.hpp"

#include "hurwitz/characters.hpp"
#include "hurwitz/double_recursion.hpp"
#include "hurwitz/potential.hpp"
#include "hurwitz/quantum_curve.hpp"
#include "hurwitz/spectral_recursion.hpp"
#include "hurwitz/tropical.hpp"

#include <algorithm>
#include <map>

namespace hurwitz {

namespace {

std::string join(const Composition& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s;
}

// Distinct orderings of the parts of p.
std::vector<Composition> orderings(const Partition& p) {
  Composition c = p.parts();
  std::sort(c.begin(), c.end());
  std::vector<Composition> out;
  do out.push_back(c);
  while (std::next_permutation(c.begin(), c.end()));
  return out;
}

// Compositions of length n with total at most s.
void compositions(int n, int s, Composition& cur, std::vector<Composition>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (int x : cur) used += x;
  for (int x = 1; used + x + (n - 1 - static_cast<int>(cur.size())) <= s; ++x) {
    cur.push_back(x);
    compositions(n, s, cur, out);
    cur.pop_back();
  }
}

void require_oracle(int d, const SuiteOptions& opts) {
  if (d > opts.oracle.max_degree)
    throw ResourceError("suite needs the oracle at degree " + std::to_string(d) + ", above its limit " +
                        std::to_string(opts.oracle.max_degree));
}

void require_sizes(const SuiteOptions& opts) {
  if (opts.dmax < 1) throw DomainError("dmax must be positive");
  if (opts.bmax < 0) throw DomainError("bmax must be nonnegative");
}

const Variant kVariants[] = {Variant::monotone, Variant::strict};

}  // namespace

void SuiteReport::record(const std::string& inputs, const Rational& expected, const Rational& actual) {
  record(inputs, expected == actual, to_string(expected), to_string(actual));
}

void SuiteReport::record(const std::string& inputs, bool ok, const std::string& expected, const std::string& actual) {
  ++checked;
  if (ok) return;
  ++failures;
  if (!first_failure) first_failure = Counterexample{inputs, expected, actual};
}

SuiteReport verify_oracle_vs_characters(const SuiteOptions& opts) {
  require_sizes(opts);
  require_oracle(opts.dmax, opts);
  SuiteReport r;
  r.suite = "oracle-vs-characters";
  const std::vector<std::vector<Partition>> profile_sets = {
      {}, {Partition({2})}, {Partition({3})}, {Partition({2}), Partition({2})}};
  for (int g = 0; g <= 1; ++g)
    for (const auto& profiles : profile_sets)
      for (int b = 0; b <= opts.bmax; ++b)
        for (int k = 0; k <= b; ++k)
          for (int l = 0; k + l <= b; ++l) {
            const int m = b - k - l;
            PotentialKey key{k, l, m, profiles};
            QSeries connected = connected_hurwitz_series(g, key, opts.dmax);
            for (int d = 1; d <= opts.dmax; ++d) {
              if (std::any_of(profiles.begin(), profiles.end(), [&](const Partition& p) { return p.size() > d; }))
                continue;
              HurwitzSpec spec;
              spec.base_genus = g;
              spec.degree = d;
              spec.profiles = profiles;
              spec.k = k;
              spec.l = l;
              spec.m = m;
              try {
                spec.source_genus = source_genus_for(g, d, profiles, b);
              } catch (const DomainError&) {
                continue;
              }
              if (spec.source_genus > 3) continue;
              r.record(spec.str(), count_triply_mixed(spec, opts.oracle), hurwitz_by_characters(spec));
              if (spec.source_genus < 0) continue;
              spec.connected = true;
              r.record(spec.str(), count_triply_mixed(spec, opts.oracle), connected[d]);
            }
          }
  return r;
}

SuiteReport verify_n_recursion(const SuiteOptions& opts) {
  require_sizes(opts);
  require_oracle(opts.dmax, opts);
  SuiteReport r;
  r.suite = "n-recursion";
  for (Variant v : kVariants)
    for (int d = 1; d <= opts.dmax; ++d)
      for (const auto& mu : enumerate_partitions(d))
        for (int i = 0; i < mu.length(); ++i) {
          if (i > 0 && mu[i] == mu[i - 1]) continue;
          Composition rest = mu.parts();
          rest.erase(rest.begin() + i);
          Composition full{mu[i]};
          full.insert(full.end(), rest.begin(), rest.end());
          for (const auto& nu_p : enumerate_partitions(d))
            for (const auto& nu : orderings(nu_p))
              for (int b = 0; b <= opts.bmax; ++b)
                for (int l = 1; l <= nu.back(); ++l) {
                  std::string in = to_string(v) + " b=" + std::to_string(b) + " part=" + std::to_string(mu[i]) +
                                   " rest=" + join(rest) + " nu=" + join(nu) + " l=" + std::to_string(l);
                  r.record(in, Rational(oracle_N_b(v, b, full, 0, l, nu, opts.oracle)),
                           Rational(N_value_b(v, b, mu[i], rest, l, nu)));
                }
        }
  return r;
}

SuiteReport verify_double(const SuiteOptions& opts) {
  require_sizes(opts);
  require_oracle(opts.dmax, opts);
  SuiteReport r;
  r.suite = "double";
  for (Variant v : kVariants)
    for (int d = 1; d <= opts.dmax; ++d)
      for (const auto& mu : enumerate_partitions(d))
        for (const auto& nu : enumerate_partitions(d)) {
          const int base = mu.length() + nu.length() - 2;
          for (int b = 0; b <= opts.bmax; ++b) {
            if ((b - base) % 2) continue;
            const int g2 = b - base;  // twice the genus
            std::string in = to_string(v) + " b=" + std::to_string(b) + " mu=" + mu.str() + " nu=" + nu.str();
            if (g2 >= 0)
              r.record(in + " connected", oracle_double_hurwitz(v, g2 / 2, mu, nu, true, opts.oracle),
                       double_hurwitz(v, g2 / 2, mu, nu));
            r.record(in + " disconnected", oracle_double_hurwitz(v, g2 / 2, mu, nu, false, opts.oracle),
                     disconnected_double_hurwitz(v, b, mu, nu));
          }
        }
  return r;
}

SuiteReport verify_toprec(const SuiteOptions& opts) {
  require_sizes(opts);
  require_oracle(opts.dmax, opts);
  SuiteReport r;
  r.suite = "toprec";
  for (int g = 0; 2 * g - 1 <= opts.euler_max; ++g)
    for (int n = 1; 2 * g - 2 + n <= opts.euler_max; ++n) {
      const bool unstable = 2 * g - 2 + n <= 0;
      MultiDifferential omega = unstable ? initial_omega(g, n) : ceo_omega(g, n);
      const std::string gn = "g=" + std::to_string(g) + " n=" + std::to_string(n);
      if (!unstable) {
        auto violations = invariant_violations(omega);
        r.record(gn + " invariants", violations.empty(), "none", violations.empty() ? "none" : violations.front());
      }
      std::vector<Composition> mus;
      Composition cur;
      compositions(n, opts.dmax, cur, mus);
      for (const auto& mu : mus) {
        int size = 0;
        for (int x : mu) size += x;
        Integer count = count_monotone_of_fixed_target(Partition::from_unsorted(mu), 2 * g - 2 + n + size, false,
                                                       opts.oracle);
        Rational oracle = (n + size) % 2 == 0 ? Rational(count) : Rational(-count);
        const std::string in = gn + " mu=" + join(mu);
        r.record(in + " extract", oracle, extract_C(omega, mu));
        r.record(in + " cut-and-join", oracle, cut_and_join_C(g, mu));
      }
    }
  return r;
}

SuiteReport verify_tropical(const SuiteOptions& opts) {
  require_sizes(opts);
  SuiteReport r;
  r.suite = "tropical";
  for (Variant v : kVariants) {
    PotentialKey key;
    (v == Variant::monotone ? key.l : key.m) = 2;
    QSeries chars = connected_hurwitz_series(1, key, opts.dmax);
    for (int d = 1; d <= opts.dmax; ++d)
      r.record(to_string(v) + " elliptic g=2 d=" + std::to_string(d), chars[d], tropical_elliptic_sum(v, 2, d));
  }
  const int line_d = std::min(opts.dmax, 4);
  require_oracle(line_d, opts);
  for (Variant v : kVariants)
    for (int d = 1; d <= line_d; ++d)
      for (const auto& mu : enumerate_partitions(d))
        for (const auto& nu : enumerate_partitions(d)) {
          const int base = mu.length() + nu.length() - 2;
          for (int b = 0; b <= opts.bmax; ++b) {
            if ((b - base) % 2) continue;
            const int g = (b - base) / 2;
            std::string in = to_string(v) + " line b=" + std::to_string(b) + " mu=" + mu.str() + " nu=" + nu.str();
            if (g >= 0)
              r.record(in + " connected", oracle_double_hurwitz(v, g, mu, nu, true, opts.oracle),
                       tropical_double_sum(v, g, mu, nu, true));
            r.record(in + " disconnected", oracle_double_hurwitz(v, g, mu, nu, false, opts.oracle),
                     tropical_double_sum(v, g, mu, nu, false));
          }
        }
  return r;
}

SuiteReport verify_assembly(const SuiteOptions& opts) {
  require_sizes(opts);
  SuiteReport r;
  r.suite = "assembly";
  const std::vector<Partition> profiles = {Partition(), Partition({2}), Partition({3})};
  for (Variant v : kVariants)
    for (int base_genus = 1; base_genus <= 2; ++base_genus)
      for (const auto& mu : profiles)
        for (int b = 0; b <= opts.bmax; ++b) {
          PotentialKey key;
          (v == Variant::monotone ? key.l : key.m) = b;
          if (!mu.empty()) key.profiles.push_back(mu);
          for (int d = 1; d <= opts.dmax; ++d) {
            std::string in = to_string(v) + " base_genus=" + std::to_string(base_genus) + " b=" + std::to_string(b) +
                             " mu=" + mu.str() + " d=" + std::to_string(d);
            r.record(in, disconnected_number(base_genus, key, d, Route::characters),
                     base_g_assembly(v, base_genus, b, mu, d));
          }
        }
  return r;
}

SuiteReport verify_quantum_curves(const SuiteOptions& opts) {
  require_sizes(opts);
  SuiteReport r;
  r.suite = "quantum-curve";
  for (Variant v : kVariants)
    for (int g = 0; g <= 2; ++g) {
      CurveCheck c = verify_quantum_curve(v, g, opts.dmax, opts.dmax);
      // one check per known residual cell
      r.checked += std::max(c.checked_cells - 1, 0);
      r.record(to_string(v) + " g=" + std::to_string(g) + " dmax=" + std::to_string(opts.dmax), c.max_abs == 0, "0",
               to_string(c.max_abs));
    }
  return r;
}

std::vector<std::string> suite_names() {
  return {"oracle-vs-characters", "n-recursion", "double", "toprec", "tropical", "assembly", "quantum-curve"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  static const std::map<std::string, SuiteReport (*)(const SuiteOptions&)> suites = {
      {"oracle-vs-characters", verify_oracle_vs_characters},
      {"n-recursion", verify_n_recursion},
      {"double", verify_double},
      {"toprec", verify_toprec},
      {"tropical", verify_tropical},
      {"assembly", verify_assembly},
      {"quantum-curve", verify_quantum_curves},
  };
  auto it = suites.find(name);
  if (it == suites.end()) throw DomainError("unknown suite '" + name + "'");
  return it->second(opts);
}

}  // namespace hurwitz
