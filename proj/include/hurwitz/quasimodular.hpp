#pragma once

#include "hurwitz/partitions.hpp"
#include "hurwitz/series.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>

namespace hurwitz {

// P = 1 - 24 sum sigma_1(n) q^n, Q = 1 + 240 sum sigma_3(n) q^n,
// R = 1 - 504 sum sigma_5(n) q^n, through q^N.
QSeries eisenstein(int weight, int N);

using PartitionFunctional = std::function<Rational(const Partition&)>;

// <f>_q = sum f(lambda) q^|lambda| / sum q^|lambda|, through q^N.
QSeries q_bracket(const PartitionFunctional& f, int N);

// c_k = [z^{k-1}] 1/(2 sinh(z/2)): c_0 = 1, c_2 = -1/24, c_4 = 7/5760, odd ones 0.
Rational c_coefficient(int k);

// Q_0 = 1; Q_k(lambda) = c_k + sum_i ((lambda_i - i + 1/2)^{k-1} - (-i + 1/2)^{k-1}) / (k-1)!
Rational Q_k_eval(int k, const Partition& lambda);

// q_{k,nu} for 0 <= k <= k_max: [z^{k-1}] (e^{z/2} - e^{-z/2})^{|nu|-1} prod_i (e^{nu_i z/2} - e^{-nu_i z/2}) / |nu|!
std::vector<Rational> completion_coefficients(const Partition& nu, int k_max);

// Polynomial in P, Q, R with a mixed weight bound (P, Q, R of weight 2, 4, 6).
class QuasimodularPoly {
 public:
  using Monomial = std::array<int, 3>;  // exponents of P, Q, R

  explicit QuasimodularPoly(int weight_bound = 0) : bound_(weight_bound) {}
  static int weight(const Monomial& m) { return 2 * m[0] + 4 * m[1] + 6 * m[2]; }
  // Monomials of weight <= W ordered by weight, then lexicographically.
  static std::vector<Monomial> basis(int W);

  int weight_bound() const { return bound_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  void set(const Monomial& m, const Rational& c);
  Rational coeff(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }

  QuasimodularPoly homogeneous_part(int w) const;
  QSeries q_expansion(int N) const;
  QuasimodularPoly scaled(const Rational& c) const;
  friend bool operator==(const QuasimodularPoly& a, const QuasimodularPoly& b) { return a.terms_ == b.terms_; }

  // {"weight_bound":6,"terms":[{"P":3,"Q":0,"R":0,"coeff":"1/5184"},...]}
  std::string to_json() const;
  std::string str() const;

 private:
  int bound_;
  std::map<Monomial, Rational> terms_;  // nonzero coefficients only
};

struct FitResult {
  bool ok = false;
  QuasimodularPoly poly;
  // First q-exponent whose equation contradicts the earlier ones.
  std::optional<int> residual_index;
};

// Exact solve for the quasimodular polynomial of mixed weight <= W matching
// the coefficients q^0..q^high of s. Needs at least dim + margin of them.
FitResult fit_quasimodular(const QSeries& s, int W, int margin = 5);

}  // namespace hurwitz
