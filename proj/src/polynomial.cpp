#include "hurwitz/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace hurwitz {

namespace {

constexpr Polynomial::Key kByte = 0xff;

bool divides(Polynomial::Key a, Polynomial::Key b) {
  for (int v = 0; v < Polynomial::kMaxVars; ++v)
    if (Polynomial::exponent(a, v) > Polynomial::exponent(b, v)) return false;
  return true;
}

}  // namespace

std::array<int, Polynomial::kMaxVars> identity_rename() {
  std::array<int, Polynomial::kMaxVars> m{};
  for (int i = 0; i < Polynomial::kMaxVars; ++i) m[i] = i;
  return m;
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

Polynomial Polynomial::variable(int v) {
  Exponents e{};
  e[v] = 1;
  return monomial(1, e);
}

Polynomial::Key Polynomial::pack(const Exponents& e) {
  Key k = 0;
  for (int v = 0; v < kMaxVars; ++v) {
    if (e[v] < 0 || e[v] > 255) throw RangeError("polynomial exponent out of range");
    k |= static_cast<Key>(e[v]) << (8 * v);
  }
  return k;
}

Polynomial::Exponents Polynomial::unpack(Key k) {
  Exponents e{};
  for (int v = 0; v < kMaxVars; ++v) e[v] = exponent(k, v);
  return e;
}

Polynomial Polynomial::monomial(const Rational& c, const Exponents& e) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(pack(e), c);
  return p;
}

void Polynomial::add_term(Key k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

Rational Polynomial::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree(int v) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, exponent(k, v));
  return d;
}

int Polynomial::min_degree(int v) const {
  if (terms_.empty()) return -1;
  int d = 255;
  for (const auto& [k, c] : terms_) d = std::min(d, exponent(k, v));
  return d;
}

std::pair<Polynomial::Key, Rational> Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  return r += b;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  return r -= b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  std::unordered_map<Polynomial::Key, Rational> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Rational prod;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      prod = ca * cb;
      acc[ka + kb] += prod;
    }
  Polynomial r;
  for (auto& [k, c] : acc)
    if (c != 0) r.terms_.emplace(k, std::move(c));
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  if (c == 0) return {};
  Polynomial r = a;
  for (auto& [k, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw DomainError("negative polynomial power");
  Polynomial r(1), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(int v) const {
  std::vector<Polynomial> out(std::max(0, degree(v) + 1));
  for (const auto& [k, c] : terms_) {
    int e = exponent(k, v);
    out[e].terms_.emplace(k & ~(kByte << (8 * v)), c);
  }
  return out;
}

Polynomial Polynomial::from_coefficients(int v, const std::vector<Polynomial>& c) {
  Polynomial r;
  for (std::size_t e = 0; e < c.size(); ++e) r += c[e].shifted(v, static_cast<int>(e));
  return r;
}

Polynomial Polynomial::evaluate(int v, const Rational& c) const {
  Polynomial r;
  for (const auto& [k, x] : terms_) {
    int e = exponent(k, v);
    r.add_term(k & ~(kByte << (8 * v)), x * rpow(c, e));
  }
  return r;
}

Polynomial Polynomial::translate(int v, const Rational& c) const {
  auto coeffs = coefficients_in(v);
  Polynomial lin = variable(v) + Polynomial(c);
  Polynomial r;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * lin + *it;
  return r;
}

Polynomial Polynomial::reversed(int v, int deg) const {
  Polynomial r;
  for (const auto& [k, c] : terms_) {
    int e = exponent(k, v);
    if (e > deg) throw DomainError("reversed: degree bound too small");
    Key nk = (k & ~(kByte << (8 * v))) | (static_cast<Key>(deg - e) << (8 * v));
    r.terms_.emplace(nk, c);
  }
  return r;
}

Polynomial Polynomial::rename(const std::array<int, kMaxVars>& map) const {
  Polynomial r;
  for (const auto& [k, c] : terms_) {
    Exponents e{};
    for (int v = 0; v < kMaxVars; ++v) e[map[v]] += exponent(k, v);
    r.add_term(pack(e), c);
  }
  return r;
}

Polynomial Polynomial::shifted(int v, int k) const {
  Polynomial r;
  for (const auto& [key, c] : terms_) {
    int e = exponent(key, v) + k;
    if (e < 0 || e > 255) throw RangeError("shifted: exponent out of range");
    r.terms_.emplace((key & ~(kByte << (8 * v))) | (static_cast<Key>(e) << (8 * v)), c);
  }
  return r;
}

Polynomial Polynomial::derivative(int v) const {
  Polynomial r;
  for (const auto& [k, c] : terms_) {
    int e = exponent(k, v);
    if (e == 0) continue;
    r.terms_.emplace(k - (Key(1) << (8 * v)), c * e);
  }
  return r;
}

Polynomial Polynomial::truncated(const Exponents& bound) const {
  Polynomial r;
  for (const auto& [k, c] : terms_) {
    bool keep = true;
    for (int v = 0; v < kMaxVars && keep; ++v) keep = exponent(k, v) <= bound[v];
    if (keep) r.terms_.emplace(k, c);
  }
  return r;
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(pack(e));
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& f) const {
  if (f.is_zero()) throw DomainError("division by the zero polynomial");
  auto [fk, fc] = f.leading_term();
  Polynomial rem = *this, q;
  while (!rem.is_zero()) {
    auto [rk, rc] = rem.leading_term();
    if (!divides(fk, rk)) return std::nullopt;
    Key qk = rk - fk;
    Rational qc = rc / fc;
    q.terms_.emplace(qk, qc);
    for (const auto& [k, c] : f.terms_) rem.add_term(k + qk, -qc * c);
  }
  return q;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string mono;
    for (int v = 0; v < kMaxVars; ++v) {
      int e = exponent(k, v);
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += v < static_cast<int>(names.size()) ? names[v] : "z" + std::to_string(v + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    Rational a = c;
    if (!s.empty()) {
      s += a < 0 ? " - " : " + ";
      a = abs(a);
    }
    if (mono.empty())
      s += to_string(a);
    else if (a == 1)
      s += mono;
    else if (a == -1)
      s += "-" + mono;
    else
      s += to_string(a) + "*" + mono;
  }
  return s;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first != y.first) return x.first < y.first;
                                        return x.second < y.second;
                                      });
}

}  // namespace hurwitz
