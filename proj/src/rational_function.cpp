#include "hurwitz/rational_function.hpp"

namespace hurwitz {

namespace {

enum class FactorKind { variable, linear, difference, product, other };

struct FactorInfo {
  FactorKind kind = FactorKind::other;
  int v = -1, w = -1;  // variables involved
  Rational root;       // linear: f = v - root
};

// Variables occurring in p.
std::vector<int> used_variables(const Polynomial& p) {
  std::vector<int> out;
  for (int v = 0; v < Polynomial::kMaxVars; ++v)
    if (p.uses(v)) out.push_back(v);
  return out;
}

FactorInfo classify(const Polynomial& f) {
  FactorInfo info;
  auto vars = used_variables(f);
  if (vars.size() == 1 && f.degree(vars[0]) == 1) {
    info.v = vars[0];
    if (f.size() == 1) {
      info.kind = FactorKind::variable;
    } else {
      info.kind = FactorKind::linear;
      info.root = -f.constant_term();
    }
  } else if (vars.size() == 2 && f.size() == 2) {
    int i = vars[0], j = vars[1];
    Polynomial::Exponents e{};
    e[j] = 1;
    Polynomial diff = Polynomial::monomial(1, e) - Polynomial::variable(i);
    e[i] = 1;
    Polynomial prod = Polynomial::monomial(1, e) - Polynomial(1);
    if (f == diff) info.kind = FactorKind::difference;
    if (f == prod) info.kind = FactorKind::product;
    info.v = i;
    info.w = j;
  }
  return info;
}

bool vanishes_on(const Polynomial& p, const FactorInfo& info, const Polynomial& f) {
  switch (info.kind) {
    case FactorKind::variable:
      return p.min_degree(info.v) > 0;
    case FactorKind::linear:
      return p.evaluate(info.v, info.root).is_zero();
    case FactorKind::difference: {
      auto m = identity_rename();
      m[info.w] = info.v;
      return p.rename(m).is_zero();
    }
    case FactorKind::product: {
      // p(v, w = 1/v) * v^deg_w
      int dw = p.degree(info.w);
      auto m = identity_rename();
      m[info.w] = info.v;
      Polynomial r = p.reversed(info.w, dw);
      return r.rename(m).is_zero();
    }
    case FactorKind::other:
      return p.divide_exact(f).has_value();
  }
  return false;
}

Polynomial quotient_by(const Polynomial& p, const FactorInfo& info, const Polynomial& f) {
  if (info.kind == FactorKind::variable) return p.shifted(info.v, -1);
  auto q = p.divide_exact(f);
  if (!q) throw DomainError("internal: factor does not divide");
  return *q;
}

std::vector<Polynomial> candidates(const Polynomial& d) {
  auto vars = used_variables(d);
  std::vector<Polynomial> out;
  for (int v : vars) {
    out.push_back(Polynomial::variable(v) + Polynomial(1));
    out.push_back(Polynomial::variable(v) - Polynomial(1));
  }
  for (std::size_t a = 0; a < vars.size(); ++a)
    for (std::size_t b = a + 1; b < vars.size(); ++b) {
      Polynomial::Exponents e{};
      e[vars[b]] = 1;
      out.push_back(Polynomial::monomial(1, e) - Polynomial::variable(vars[a]));
      e[vars[a]] = 1;
      out.push_back(Polynomial::monomial(1, e) - Polynomial(1));
    }
  return out;
}

}  // namespace

std::pair<Rational, RationalFunction::Factors> factor_denominator(const Polynomial& d) {
  if (d.is_zero()) throw DomainError("zero denominator");
  RationalFunction::Factors out;
  Polynomial rest = d;
  for (int v = 0; v < Polynomial::kMaxVars; ++v) {
    int k = rest.min_degree(v);
    if (k > 0) {
      out[Polynomial::variable(v)] += k;
      rest = rest.shifted(v, -k);
    }
  }
  if (!rest.is_constant()) {
    for (const auto& f : candidates(rest)) {
      auto info = classify(f);
      while (!rest.is_constant() && vanishes_on(rest, info, f)) {
        rest = quotient_by(rest, info, f);
        out[f] += 1;
      }
    }
  }
  Rational c = rest.constant_term();
  if (!rest.is_constant()) {
    c = rest.leading_term().second;
    out[Rational(1) / c * rest] += 1;
  }
  return {c, out};
}

RationalFunction RationalFunction::raw(Polynomial num, Factors den) {
  RationalFunction r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

void RationalFunction::add_denominator(const Polynomial& d, int e) {
  auto [c, factors] = factor_denominator(d);
  num_ = Rational(1) / rpow(c, e) * num_;
  for (const auto& [f, k] : factors) den_[f] += k * e;
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    auto info = classify(it->first);
    while (it->second > 0 && vanishes_on(num_, info, it->first)) {
      num_ = quotient_by(num_, info, it->first);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

RationalFunction RationalFunction::reduced() const {
  RationalFunction r = *this;
  r.reduce();
  return r;
}

RationalFunction RationalFunction::quotient(const Polynomial& num, const Polynomial& den) {
  RationalFunction r(num);
  r.add_denominator(den, 1);
  r.reduce();
  return r;
}

Polynomial RationalFunction::denominator_polynomial() const {
  Polynomial d(1);
  for (const auto& [f, e] : den_) d = d * f.pow(e);
  return d;
}

RationalFunction RationalFunction::operator-() const { return raw(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RationalFunction::Factors den = a.den_;
  for (const auto& [f, e] : b.den_) den[f] = std::max(den[f], e);
  Polynomial na = a.num_, nb = b.num_;
  for (const auto& [f, e] : den) {
    auto ia = a.den_.find(f);
    auto ib = b.den_.find(f);
    int ea = ia == a.den_.end() ? 0 : ia->second;
    int eb = ib == b.den_.end() ? 0 : ib->second;
    if (e > ea) na = na * f.pow(e - ea);
    if (e > eb) nb = nb * f.pow(e - eb);
  }
  auto r = RationalFunction::raw(na + nb, std::move(den));
  r.reduce();
  return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RationalFunction::Factors den = a.den_;
  for (const auto& [f, e] : b.den_) den[f] += e;
  auto r = RationalFunction::raw(a.num_ * b.num_, std::move(den));
  r.reduce();
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DomainError("inverse of the zero rational function");
  return quotient(denominator_polynomial(), num_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction r = raw(num_.pow(e), {});
  for (const auto& [f, k] : den_) r.den_[f] = k * e;
  return r;
}

RationalFunction RationalFunction::rename(const std::array<int, Polynomial::kMaxVars>& map) const {
  RationalFunction r(num_.rename(map));
  for (const auto& [f, e] : den_) r.add_denominator(f.rename(map), e);
  r.reduce();
  return r;
}

RationalFunction RationalFunction::invert_variable(int v) const {
  int dn = std::max(0, num_.degree(v));
  RationalFunction r(num_.reversed(v, dn));
  int shift = -dn;
  for (const auto& [f, e] : den_) {
    int df = f.degree(v);
    if (df <= 0) {
      r.den_[f] += e;
      continue;
    }
    shift += df * e;
    r.add_denominator(f.reversed(v, df), e);
  }
  if (shift > 0)
    r.num_ = r.num_.shifted(v, shift);
  else if (shift < 0)
    r.den_[Polynomial::variable(v)] += -shift;
  r.reduce();
  return r;
}

RationalFunction RationalFunction::evaluate(int v, const Rational& c) const {
  RationalFunction r(num_.evaluate(v, c));
  for (const auto& [f, e] : den_) {
    Polynomial fv = f.evaluate(v, c);
    if (fv.is_zero()) throw DomainError("evaluation at a pole");
    r.add_denominator(fv, e);
  }
  r.reduce();
  return r;
}

RationalFunction RationalFunction::derivative(int v) const {
  std::vector<std::pair<Polynomial, int>> live;
  for (const auto& [f, e] : den_)
    if (f.uses(v)) live.emplace_back(f, e);
  Polynomial all(1);
  for (const auto& [f, e] : live) all = all * f;
  Polynomial num = num_.derivative(v) * all;
  for (std::size_t i = 0; i < live.size(); ++i) {
    Polynomial others(1);
    for (std::size_t j = 0; j < live.size(); ++j)
      if (j != i) others = others * live[j].first;
    num -= Rational(live[i].second) * (num_ * live[i].first.derivative(v) * others);
  }
  Factors den = den_;
  for (const auto& [f, e] : live) den[f] += 1;
  auto r = raw(std::move(num), std::move(den));
  r.reduce();
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) { return (a - b).is_zero(); }

std::string RationalFunction::str(const std::vector<std::string>& names) const {
  std::string s = "(" + num_.str(names) + ")";
  if (den_.empty()) return s;
  std::string d;
  for (const auto& [f, e] : den_) {
    if (!d.empty()) d += "*";
    d += "(" + f.str(names) + ")";
    if (e > 1) d += "^" + std::to_string(e);
  }
  return s + "/(" + d + ")";
}

}  // namespace hurwitz
