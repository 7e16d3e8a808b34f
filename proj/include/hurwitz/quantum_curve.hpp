#pragma once

#include "hurwitz/hurwitz_spec.hpp"
#include "hurwitz/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

// Z^g as a series in x and hbar; the cell (d, p) holds the coefficient of
// x^d hbar^p. Row d is known for p <= b_max + d(2g - 1).
BiSeries partition_function(Variant variant, int g, int d_max, int b_max);

// Linear combination of words in x^ = x and y^ = -hbar d/dx. A word is a
// string over {'x', 'y'} read as an operator product, so "xyy" applies y
// twice and then x.
class QuantumOperator {
 public:
  using Term = std::pair<Rational, std::string>;

  QuantumOperator() = default;
  explicit QuantumOperator(std::vector<Term> terms);

  // x y^2 + y + (y x)^{2g}
  static QuantumOperator monotone(int g);
  // y + (1 - x y)(y x)^{2g}
  static QuantumOperator strict(int g);
  static QuantumOperator for_variant(Variant v, int g) { return v == Variant::monotone ? monotone(g) : strict(g); }

  const std::vector<Term>& terms() const { return terms_; }
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

// The image keeps only cells whose inputs were all known. Throws
// PreconditionError when nothing is left.
BiSeries apply_operator(const QuantumOperator& op, const BiSeries& z);

struct CurveCheck {
  BiSeries residual;
  int checked_cells = 0;
  Rational max_abs;  // largest |coefficient| on the known window
};

CurveCheck verify_quantum_curve(Variant variant, int g, int d_max, int b_max);

}  // namespace hurwitz
