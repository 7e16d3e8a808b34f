#pragma once

#include "hurwitz/numeric.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

// Sparse polynomial over Q in at most 8 variables v0..v7. Exponents are packed
// 8 bits per variable into one word, v7 in the top byte, so the key order is
// lexicographic with v7 most significant.
class Polynomial {
 public:
  static constexpr int kMaxVars = 8;
  using Key = std::uint64_t;
  using Exponents = std::array<int, kMaxVars>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  Polynomial(long c) : Polynomial(Rational(c)) {}
  static Polynomial variable(int v);
  static Polynomial monomial(const Rational& c, const Exponents& e);

  static int exponent(Key k, int v) { return static_cast<int>((k >> (8 * v)) & 0xff); }
  static Key pack(const Exponents& e);
  static Exponents unpack(Key k);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t size() const { return terms_.size(); }
  // -1 for the zero polynomial
  int degree(int v) const;
  int min_degree(int v) const;
  bool uses(int v) const { return degree(v) > 0; }
  // Coefficient and key of the largest monomial.
  std::pair<Key, Rational> leading_term() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial pow(int e) const;

  // P = sum_k c_k v^k
  std::vector<Polynomial> coefficients_in(int v) const;
  static Polynomial from_coefficients(int v, const std::vector<Polynomial>& c);
  // P with v replaced by the constant c
  Polynomial evaluate(int v, const Rational& c) const;
  // P(v + c)
  Polynomial translate(int v, const Rational& c) const;
  // v^deg P(1/v); needs deg >= degree(v)
  Polynomial reversed(int v, int deg) const;
  // variable i becomes variable map[i]; variables mapped to the same target merge
  Polynomial rename(const std::array<int, kMaxVars>& map) const;
  // multiply by v^k (k may be negative if every term allows it)
  Polynomial shifted(int v, int k) const;
  Polynomial derivative(int v) const;
  // Monomials whose exponent in v exceeds bound[v] are dropped.
  Polynomial truncated(const Exponents& bound) const;
  Rational coefficient(const Exponents& e) const;

  std::optional<Polynomial> divide_exact(const Polynomial& f) const;

  std::string str(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator<(const Polynomial& a, const Polynomial& b);

 private:
  void add_term(Key k, const Rational& c);
  std::map<Key, Rational> terms_;  // no zero coefficients
};

// Identity map with the given overrides.
std::array<int, Polynomial::kMaxVars> identity_rename();

}  // namespace hurwitz
