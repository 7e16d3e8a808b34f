#pragma once

#include "hurwitz/polynomial.hpp"

namespace hurwitz {

// num / prod f^e with a factored denominator. Factors are monic (leading
// coefficient 1) and nonconstant. Denominators are split into monomials,
// v +- 1, v_i - v_j and v_i v_j - 1 where possible; whatever is left stays as
// one factor. After every operation the numerator is reduced against each
// factor, so for denominators built from those pieces the form is canonical.
class RationalFunction {
 public:
  using Factors = std::map<Polynomial, int>;

  RationalFunction() = default;
  RationalFunction(const Polynomial& p) : num_(p) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c) {}    // NOLINT
  RationalFunction(long c) : num_(Rational(c)) {}     // NOLINT
  static RationalFunction quotient(const Polynomial& num, const Polynomial& den);
  static RationalFunction variable(int v) { return RationalFunction(Polynomial::variable(v)); }

  const Polynomial& numerator() const { return num_; }
  const Factors& denominator() const { return den_; }
  Polynomial denominator_polynomial() const;
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction pow(int e) const;
  RationalFunction inverse() const;

  RationalFunction rename(const std::array<int, Polynomial::kMaxVars>& map) const;
  // v -> 1/v
  RationalFunction invert_variable(int v) const;
  // v -> c
  RationalFunction evaluate(int v, const Rational& c) const;
  RationalFunction derivative(int v) const;

  // Exact equality (cross-multiplication).
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string str(const std::vector<std::string>& names = {}) const;

  // Product without reduction, for callers that reduce once at the end.
  static RationalFunction raw(Polynomial num, Factors den);
  RationalFunction reduced() const;

 private:
  void add_denominator(const Polynomial& d, int e);
  void reduce();
  Polynomial num_;
  Factors den_;
};

// Splits d into monic factors (monomials v, v +- 1, v_i - v_j, v_i v_j - 1 and a
// remainder) and a constant: d = constant * prod f^e.
std::pair<Rational, RationalFunction::Factors> factor_denominator(const Polynomial& d);

}  // namespace hurwitz
