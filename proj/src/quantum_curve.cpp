#include "hurwitz/quantum_curve.hpp"

#include "hurwitz/partitions.hpp"

#include <optional>

namespace hurwitz {

BiSeries partition_function(Variant variant, int g, int d_max, int b_max) {
  if (g < 0) throw DomainError("partition_function: negative genus");
  if (d_max < 1) throw DomainError("partition_function: d_max must be positive");
  if (b_max < 0) throw DomainError("partition_function: negative b_max");
  const int shift = 2 * g - 1;  // 1 - chi
  const int p_low = std::min(0, d_max * shift);
  const int p_high = std::max(b_max, b_max + d_max * shift);
  BiSeries z(d_max, p_low, p_high);
  z.set(0, 0, 1);
  for (int d = 1; d <= d_max; ++d) {
    Rational weight = shift >= 0 ? Rational(ipow(factorial(d), shift)) : make_rational(1, factorial(d));
    for (int b = 0; b <= b_max; ++b) {
      Integer c = variant == Variant::monotone ? stirling(StirlingKind::second, d + b - 1, d - 1)
                                               : (b <= d - 1 ? stirling(StirlingKind::first_unsigned, d, d - b) : 0);
      z.set(d, b + d * shift, weight * c);
    }
    for (int p = b_max + d * shift + 1; p <= p_high; ++p) z.forget(d, p);
  }
  for (int p = b_max + 1; p <= p_high; ++p) z.forget(0, p);
  return z;
}

QuantumOperator::QuantumOperator(std::vector<Term> terms) : terms_(std::move(terms)) {
  for (const auto& [c, w] : terms_)
    if (w.find_first_not_of("xy") != std::string::npos) throw DomainError("operator words use only x and y: " + w);
}

namespace {

std::string repeat(const std::string& s, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += s;
  return out;
}

}  // namespace

QuantumOperator QuantumOperator::monotone(int g) {
  if (g < 0) throw DomainError("negative genus");
  return QuantumOperator({{1, "xyy"}, {1, "y"}, {1, repeat("yx", 2 * g)}});
}

QuantumOperator QuantumOperator::strict(int g) {
  if (g < 0) throw DomainError("negative genus");
  auto power = repeat("yx", 2 * g);
  return QuantumOperator({{1, "y"}, {1, power}, {-1, "xy" + power}});
}

std::string QuantumOperator::str() const {
  std::string s;
  for (const auto& [c, w] : terms_) {
    std::string word = w.empty() ? "1" : w;
    if (s.empty())
      s = c == 1 ? word : to_string(c) + "*" + word;
    else if (c == 1)
      s += " + " + word;
    else if (c == -1)
      s += " - " + word;
    else
      s += " + " + to_string(c) + "*" + word;
  }
  return s.empty() ? "0" : s;
}

namespace {

BiSeries apply_x(const BiSeries& z) {
  BiSeries r(z.d_max(), z.p_low(), z.p_high());
  for (int d = 0; d <= z.d_max(); ++d)
    for (int p = z.p_low(); p <= z.p_high(); ++p) {
      if (z.known(d - 1, p))
        r.set(d, p, z.get(d - 1, p));
      else
        r.forget(d, p);
    }
  return r;
}

// -hbar d/dx: x^{d+1} h^{p-1} -> -(d+1) x^d h^p
BiSeries apply_y(const BiSeries& z) {
  BiSeries r(z.d_max(), z.p_low(), z.p_high());
  for (int d = 0; d <= z.d_max(); ++d)
    for (int p = z.p_low(); p <= z.p_high(); ++p) {
      if (z.known(d + 1, p - 1))
        r.set(d, p, Rational(-(d + 1)) * z.get(d + 1, p - 1));
      else
        r.forget(d, p);
    }
  return r;
}

}  // namespace

BiSeries apply_operator(const QuantumOperator& op, const BiSeries& z) {
  if (op.terms().empty()) return Rational(0) * z;
  std::optional<BiSeries> total;
  for (const auto& [c, word] : op.terms()) {
    BiSeries t = z;
    for (auto it = word.rbegin(); it != word.rend(); ++it) t = *it == 'x' ? apply_x(t) : apply_y(t);
    t = c * t;
    total = total ? *total + t : t;
  }
  if (total->known_count() == 0) throw PreconditionError("operator shifts leave no known coefficient; enlarge the window");
  return *total;
}

CurveCheck verify_quantum_curve(Variant variant, int g, int d_max, int b_max) {
  auto z = partition_function(variant, g, d_max, b_max);
  auto residual = apply_operator(QuantumOperator::for_variant(variant, g), z);
  CurveCheck out{residual, residual.known_count(), Rational(0)};
  for (int d = 0; d <= residual.d_max(); ++d)
    for (int p = residual.p_low(); p <= residual.p_high(); ++p)
      if (residual.known(d, p)) out.max_abs = std::max(out.max_abs, Rational(abs(residual.get(d, p))));
  return out;
}

}  // namespace hurwitz
