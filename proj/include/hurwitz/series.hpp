#pragma once

#include "hurwitz/numeric.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hurwitz {

// Truncated Laurent series sum_{e >= low} c_e v^e. Coefficients are known for
// e <= high(); below low they are zero, above high they are unknown.
class QSeries {
 public:
  QSeries() = default;
  QSeries(std::string var, int low, std::vector<Rational> coeffs);
  static QSeries constant(const Rational& c, int high, std::string var = "q");
  static QSeries monomial(const Rational& c, int exponent, int high, std::string var = "q");
  // c_e = f(e) for low <= e <= high
  static QSeries from_function(int low, int high, const std::function<Rational(int)>& f, std::string var = "q");

  const std::string& var() const { return var_; }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Throws RangeError above high().
  Rational coeff(int e) const;
  Rational operator[](int e) const { return coeff(e); }

  // Drops known leading zeros; the zero series keeps its window.
  QSeries normalized() const;
  QSeries truncated(int high) const;
  // v -> c v
  QSeries scaled_variable(const Rational& c) const;
  // multiply by v^k
  QSeries shifted(int k) const;
  // v d/dv
  QSeries euler_derivative() const;
  bool is_zero() const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator/(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const Rational& c, const QSeries& a);
  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  QSeries pow(int n) const;
  QSeries inverse() const;
  // Needs constant term 1 and no negative powers.
  QSeries log() const;
  // Needs no negative powers and constant term 0.
  QSeries exp() const;

  // Equal on the common window.
  bool agrees_with(const QSeries& o) const;

  // {"var":"q","low":0,"coeffs":["1","-24",...]}
  std::string to_json() const;
  static QSeries from_json(const std::string& text);

 private:
  std::string var_ = "q";
  int low_ = 0;
  std::vector<Rational> coeffs_;
};

// Coefficients on a grid x^d h^p, 0 <= d <= d_max, p_low <= p <= p_high, with a
// mask of known cells. Cells with d < 0, or with p < p_low and d <= d_max, are
// zero; cells with d > d_max or p > p_high are unknown.
class BiSeries {
 public:
  BiSeries(int d_max, int p_low, int p_high);  // every grid cell known and zero

  int d_max() const { return d_max_; }
  int p_low() const { return p_low_; }
  int p_high() const { return p_high_; }

  bool known(int d, int p) const;
  // Throws RangeError on unknown cells.
  Rational get(int d, int p) const;
  void set(int d, int p, const Rational& v);
  void forget(int d, int p);
  int known_count() const;
  bool known_zero() const;  // every known cell is zero

  friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const Rational& c, const BiSeries& a);

  // Needs the d = 0 row to be exactly 1 at p = 0 (log) or exactly 0 (exp).
  BiSeries log() const;
  BiSeries exp() const;

 private:
  int index(int d, int p) const { return d * (p_high_ - p_low_ + 1) + (p - p_low_); }
  int d_max_, p_low_, p_high_;
  std::vector<Rational> cells_;
  std::vector<char> mask_;
};

}  // namespace hurwitz
