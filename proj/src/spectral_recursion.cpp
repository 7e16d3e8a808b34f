#include "hurwitz/spectral_recursion.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace hurwitz {

namespace {

RationalFunction var(int v) { return RationalFunction::variable(v); }

RationalFunction x_of(int v) { return (var(v) - 1).pow(2) / var(v); }
RationalFunction dx_of(int v) { return (var(v).pow(2) - 1) / var(v).pow(2); }

RationalFunction bergman(int a, int b) { return RationalFunction(1) / (var(a) - var(b)).pow(2); }

// Residue at v = -1 of num / prod den.
RationalFunction residue_at_minus_one(const Polynomial& num, const RationalFunction::Factors& den, int v) {
  Polynomial top = num.translate(v, -1);
  Polynomial bottom(1);
  RationalFunction::Factors outside;
  int pole = 0;
  for (const auto& [f, e] : den) {
    if (!f.uses(v)) {
      outside[f] += e;
      continue;
    }
    Polynomial t = f.translate(v, -1);
    int m = t.min_degree(v);
    pole += m * e;
    bottom = bottom * t.shifted(v, -m).pow(e);
  }
  int r = pole - 1;
  if (r < 0 || top.is_zero()) return {};
  auto nk = top.coefficients_in(v);
  auto gk = bottom.coefficients_in(v);
  const Polynomial& g0 = gk[0];

  // 1/G = sum_k P_k t^k / g0^(k+1) with P_0 = 1,
  // P_k = -sum_{j>=1} g_j P_{k-j} g0^(j-1).
  std::vector<Polynomial> p(r + 1), g0pow(r + 1);
  g0pow[0] = Polynomial(1);
  for (int k = 1; k <= r; ++k) g0pow[k] = g0pow[k - 1] * g0;
  p[0] = Polynomial(1);
  for (int k = 1; k <= r; ++k) {
    Polynomial acc;
    for (int j = 1; j <= k && j < static_cast<int>(gk.size()); ++j) acc -= gk[j] * p[k - j] * g0pow[j - 1];
    p[k] = std::move(acc);
  }
  Polynomial total;
  for (int k = 0; k <= r; ++k) {
    int i = r - k;
    if (i < static_cast<int>(nk.size()) && !nk[i].is_zero()) total += nk[i] * p[k] * g0pow[r - k];
  }
  RationalFunction res = RationalFunction::quotient(total, g0pow[r] * g0);
  return res * RationalFunction::raw(Polynomial(1), outside).reduced();
}

// Lower omega with variable i sent to map[i].
RationalFunction placed(const MultiDifferential& w, const std::vector<int>& targets) {
  auto m = identity_rename();
  for (std::size_t i = 0; i < targets.size(); ++i) m[i] = targets[i];
  return w.F.rename(m);
}

MultiDifferential lower(int g, int n) {
  if (g == 0 && (n == 1 || n == 2)) return initial_omega(g, n);
  return ceo_omega(g, n);
}

MultiDifferential compute_omega(int g, int n) {
  const int Z = n, Zb = n + 1;
  auto merge = identity_rename();
  merge[Zb] = Z;
  auto sigma_slot = [&](const RationalFunction& f) { return sigma_pullback(f, Zb).rename(merge); };

  std::vector<RationalFunction> terms;
  // omega_{g-1,n+1}(z, sigma z, z_2..z_n)
  if (g >= 1) {
    std::vector<int> t{Z, Zb};
    for (int k = 1; k < n; ++k) t.push_back(k);
    terms.push_back(sigma_slot(placed(lower(g - 1, n + 1), t)));
  }
  // omega_{g1}(z, z_I) omega_{g2}(sigma z, z_J)
  const int rest = n - 1;
  for (int mask = 0; mask < (1 << rest); ++mask) {
    std::vector<int> in, out;
    for (int k = 0; k < rest; ++k) (mask >> k & 1 ? in : out).push_back(k + 1);
    for (int g1 = 0; g1 <= g; ++g1) {
      int g2 = g - g1;
      int n1 = 1 + static_cast<int>(in.size()), n2 = 1 + static_cast<int>(out.size());
      if ((g1 == 0 && n1 == 1) || (g2 == 0 && n2 == 1)) continue;
      std::vector<int> t1{Z}, t2{Zb};
      t1.insert(t1.end(), in.begin(), in.end());
      t2.insert(t2.end(), out.begin(), out.end());
      RationalFunction a = placed(lower(g1, n1), t1);
      RationalFunction b = sigma_slot(placed(lower(g2, n2), t2));
      terms.push_back(a * b);
    }
  }

  auto kmap = identity_rename();
  kmap[1] = Z;
  const RationalFunction kernel = spectral_data().K.rename(kmap);
  RationalFunction F;
  for (const auto& t : terms) {
    RationalFunction integrand = kernel * t;
    F += residue_at_minus_one(integrand.numerator(), integrand.denominator(), Z);
  }
  return {g, n, F};
}

std::recursive_mutex omega_mutex;
std::map<std::pair<int, int>, MultiDifferential> omega_cache;

std::mutex cj_mutex;
std::map<std::pair<int, Composition>, Rational> cj_cache;

Composition cj_key(const Composition& mu) {
  Composition k = mu;
  std::sort(k.begin() + 1, k.end());
  return k;
}

// Truncated power series inverse of f, which must have a nonzero constant term.
Polynomial series_inverse(const Polynomial& f, const Polynomial::Exponents& bound, int total) {
  Rational f0 = f.constant_term();
  Polynomial h = (Rational(1) / f0 * f - Polynomial(1)).truncated(bound);
  Polynomial term(1), acc(1);
  for (int k = 1; k <= total && !term.is_zero(); ++k) {
    term = (term * -h).truncated(bound);
    acc += term;
  }
  return Rational(1) / f0 * acc;
}

Rational binomial_q(int n, int k) { return Rational(binomial(n, k)); }

}  // namespace

const SpectralData& spectral_data() {
  static const SpectralData data = [] {
    SpectralData d;
    RationalFunction z = var(0), z1 = var(0), w = var(1);
    d.x = x_of(0);
    d.y = z / (z - 1).pow(3);
    d.dx = dx_of(0);
    d.K = w * (w - 1).pow(3) / (RationalFunction(2) * (w + 1) * (z1 - w) * (z1 * w - 1));
    return d;
  }();
  return data;
}

RationalFunction sigma_pullback(const RationalFunction& f, int v) {
  return f.invert_variable(v) * (RationalFunction(-1) / var(v).pow(2));
}

MultiDifferential initial_omega(int g, int n) {
  if (g == 0 && n == 1) return {0, 1, spectral_data().y * spectral_data().dx};
  if (g == 0 && n == 2) return {0, 2, bergman(0, 1)};
  throw DomainError("initial_omega: only (0,1) and (0,2)");
}

MultiDifferential ceo_omega(int g, int n) {
  if (g < 0 || n < 1 || 2 * g - 2 + n <= 0) throw DomainError("ceo_omega needs 2g-2+n > 0");
  if (n + 2 > Polynomial::kMaxVars) throw RangeError("ceo_omega: too many variables");
  std::lock_guard lock(omega_mutex);
  auto it = omega_cache.find({g, n});
  if (it != omega_cache.end()) return it->second;
  MultiDifferential w = compute_omega(g, n);
  omega_cache.emplace(std::pair{g, n}, w);
  return w;
}

Rational x_coefficient(const RationalFunction& G, const std::vector<int>& k) {
  const int n = static_cast<int>(k.size());
  RationalFunction H = G;
  for (int i = 0; i < n; ++i) H = H.invert_variable(i);
  Polynomial num = H.numerator();
  for (int i = 0; i < n; ++i) {
    if (k[i] < 1) throw DomainError("x_coefficient: exponents must be positive");
    Polynomial u = Polynomial::variable(i);
    num = num * (Polynomial(1) - u).pow(2 * k[i] - 1) * (Polynomial(1) + u);
  }
  Polynomial::Exponents bound{};
  std::vector<std::pair<Polynomial, int>> regular;
  std::vector<int> shift(n, 0);
  for (const auto& [f, e] : H.denominator()) {
    if (f.size() == 1) {
      int v = -1;
      for (int i = 0; i < Polynomial::kMaxVars; ++i)
        if (f.uses(i)) v = i;
      if (v < 0 || v >= n) throw PreconditionError("x_coefficient: unexpected monomial factor");
      shift[v] += e;
    } else if (f.constant_term() == 0) {
      throw PreconditionError("x_coefficient: factor vanishes at infinity: " + f.str());
    } else {
      regular.emplace_back(f, e);
    }
  }
  int total = 0;
  for (int i = 0; i < n; ++i) {
    bound[i] = k[i] + shift[i];
    if (bound[i] < 0) return 0;
    total += bound[i];
  }
  Polynomial s = num.truncated(bound);
  for (const auto& [f, e] : regular) {
    Polynomial inv = series_inverse(f, bound, total);
    for (int j = 0; j < e; ++j) s = (s * inv).truncated(bound);
  }
  return s.coefficient(bound);
}

Rational extract_C(const MultiDifferential& omega, const Composition& mu) {
  if (static_cast<int>(mu.size()) != omega.n) throw DomainError("extract_C: length of mu differs from n");
  RationalFunction G = omega.F;
  if (omega.g == 0 && omega.n == 2) G = G - dx_of(0) * dx_of(1) / (x_of(0) - x_of(1)).pow(2);
  RationalFunction dx(1);
  for (int i = 0; i < omega.n; ++i) dx = dx * dx_of(i);
  G = G / dx;
  std::vector<int> k;
  for (int m : mu) {
    if (m < 1) throw DomainError("extract_C: parts must be positive");
    k.push_back(m + 1);
  }
  return x_coefficient(G, k);
}

Rational cut_and_join_C(int g, const Composition& mu) {
  if (g < 0 || mu.empty()) return 0;
  for (int m : mu)
    if (m < 1) throw DomainError("cut_and_join_C: parts must be positive");
  const int n = static_cast<int>(mu.size());
  if (g == 0 && n == 1 && mu[0] == 1) return 1;
  Composition key = cj_key(mu);
  {
    std::lock_guard lock(cj_mutex);
    auto it = cj_cache.find({g, key});
    if (it != cj_cache.end()) return it->second;
  }
  const int m1 = key[0];
  Composition rest(key.begin() + 1, key.end());
  Rational acc = 0;
  for (int j = 0; j < n - 1; ++j) {
    Composition nu{m1 + rest[j]};
    for (int i = 0; i < n - 1; ++i)
      if (i != j) nu.push_back(rest[i]);
    acc += Rational(rest[j]) * cut_and_join_C(g, nu);
  }
  for (int a = 1; a < m1; ++a) {
    const int b = m1 - a;
    Composition nu{a, b};
    nu.insert(nu.end(), rest.begin(), rest.end());
    acc += cut_and_join_C(g - 1, nu);
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
      Composition i1{a}, i2{b};
      for (int k = 0; k < n - 1; ++k) (mask >> k & 1 ? i1 : i2).push_back(rest[k]);
      for (int g1 = 0; g1 <= g; ++g1) {
        Rational c1 = cut_and_join_C(g1, i1);
        if (c1 == 0) continue;
        acc += c1 * cut_and_join_C(g - g1, i2);
      }
    }
  }
  Rational c = -acc;
  std::lock_guard lock(cj_mutex);
  cj_cache.emplace(std::pair{g, key}, c);
  return c;
}

Rational closed_form_C(int g, int n, const Composition& mu) {
  if (g != 0 || n < 1 || n > 3 || static_cast<int>(mu.size()) != n)
    throw DomainError("closed_form_C: only (0,1), (0,2), (0,3)");
  int size = 0;
  for (int m : mu) {
    if (m < 1) throw DomainError("closed_form_C: parts must be positive");
    size += m;
  }
  const Rational sign = (size + n) % 2 == 0 ? 1 : -1;
  if (n == 1) return sign * binomial_q(2 * mu[0] - 2, mu[0] - 1) / Rational(mu[0]);
  if (n == 2)
    return sign * Rational(2 * mu[0] * mu[1]) / Rational(mu[0] + mu[1]) * binomial_q(2 * mu[0] - 1, mu[0]) *
           binomial_q(2 * mu[1] - 1, mu[1]);
  Rational c = sign * 8;
  for (int m : mu) c *= Rational(m) * binomial_q(2 * m - 1, m);
  return c;
}

RationalFunction f_a(int a) {
  if (a < 0) throw DomainError("f_a: a must be nonnegative");
  RationalFunction z = var(0);
  RationalFunction f = RationalFunction(2) * z.pow(2) / ((z - 1) * (z + 1).pow(3));
  const RationalFunction x = x_of(0), dx = dx_of(0);
  for (int i = 1; i <= a; ++i) f = -(x * f).derivative(0) / dx;
  return f;
}

std::vector<std::string> invariant_violations(const MultiDifferential& omega) {
  std::vector<std::string> out;
  const int n = omega.n;
  for (int i = 0; i < n; ++i) {
    if (!(sigma_pullback(omega.F, i) + omega.F).is_zero())
      out.push_back("not antisymmetric in z" + std::to_string(i + 1));
    for (int j = i + 1; j < n; ++j) {
      auto m = identity_rename();
      m[i] = j;
      m[j] = i;
      if (!(omega.F.rename(m) == omega.F))
        out.push_back("not symmetric in z" + std::to_string(i + 1) + ", z" + std::to_string(j + 1));
    }
  }
  for (const auto& [f, e] : omega.F.denominator()) {
    bool ok = false;
    for (int i = 0; i < n; ++i) {
      Polynomial v = Polynomial::variable(i);
      if (f == v + Polynomial(1)) ok = true;
      if (f == v - Polynomial(1) && e <= 1) ok = true;
    }
    if (!ok) out.push_back("unexpected pole (" + f.str() + ")^" + std::to_string(e));
  }
  return out;
}

}  // namespace hurwitz
