#include "hurwitz/quasimodular.hpp"

#include <nlohmann/json.hpp>

#include <future>

namespace hurwitz {

QSeries eisenstein(int weight, int N) {
  if (N < 0) throw DomainError("eisenstein: negative truncation");
  int factor;
  switch (weight) {
    case 2: factor = -24; break;
    case 4: factor = 240; break;
    case 6: factor = -504; break;
    default: throw DomainError("eisenstein: weight must be 2, 4 or 6");
  }
  return QSeries::from_function(0, N, [&](int n) -> Rational {
    if (n == 0) return 1;
    Integer s = 0;
    for (int t = 1; t <= n; ++t)
      if (n % t == 0) s += ipow(Integer(t), weight - 1);
    return Rational(factor * s);
  });
}

QSeries q_bracket(const PartitionFunctional& f, int N) {
  if (N < 0) throw DomainError("q_bracket: negative truncation");
  std::vector<std::future<Rational>> jobs;
  for (int n = 0; n <= N; ++n)
    jobs.push_back(std::async(std::launch::async, [&f, n]() -> Rational {
      Rational s = 0;
      for (const auto& lambda : enumerate_partitions(n)) s += f(lambda);
      return s;
    }));
  std::vector<Rational> num;
  for (auto& j : jobs) num.push_back(j.get());
  auto count = QSeries::from_function(0, N, [](int n) { return Rational(partition_count(n)); });
  return QSeries("q", 0, std::move(num)) / count;
}

namespace {

// 2 sinh(a z / 2) / z through z^N
QSeries sinh_quotient(int a, int N) {
  return QSeries::from_function(
      0, N,
      [a](int e) -> Rational {
        if (e % 2) return 0;
        int j = e + 1;
        return Rational(2 * ipow(Integer(a), j)) / Rational(ipow(Integer(2), j) * factorial(j));
      },
      "z");
}

}  // namespace

std::vector<Rational> completion_coefficients(const Partition& nu, int k_max) {
  if (k_max < 0) throw DomainError("completion_coefficients: negative k_max");
  // The generating function is z^{|nu| - 1 + l(nu)} G(z) with G regular.
  int shift = nu.size() + nu.length();
  int N = std::max(0, k_max - shift);
  QSeries g = nu.empty() ? sinh_quotient(1, N).inverse() : sinh_quotient(1, N).pow(nu.size() - 1);
  for (int part : nu) g = g * sinh_quotient(part, N);
  g = Rational(1) / Rational(factorial(nu.size())) * g;
  std::vector<Rational> out(k_max + 1, Rational(0));
  for (int k = shift; k <= k_max; ++k) out[k] = g.coeff(k - shift);
  return out;
}

Rational c_coefficient(int k) {
  if (k < 0) throw DomainError("c_coefficient: negative index");
  return completion_coefficients(Partition(), k)[k];
}

Rational Q_k_eval(int k, const Partition& lambda) {
  if (k < 0) throw DomainError("Q_k_eval: negative index");
  if (k == 0) return 1;
  Rational s = c_coefficient(k);
  Rational half(1, 2);
  for (int i = 1; i <= lambda.length(); ++i) {
    Rational a = Rational(lambda[i - 1] - i) + half;
    Rational b = Rational(-i) + half;
    s += (rpow(a, k - 1) - rpow(b, k - 1)) / Rational(factorial(k - 1));
  }
  return s;
}

std::vector<QuasimodularPoly::Monomial> QuasimodularPoly::basis(int W) {
  std::vector<Monomial> out;
  for (int w = 0; w <= W; w += 2)
    for (int a = 0; 2 * a <= w; ++a)
      for (int b = 0; 2 * a + 4 * b <= w; ++b)
        if ((w - 2 * a - 4 * b) % 6 == 0) out.push_back({a, b, (w - 2 * a - 4 * b) / 6});
  return out;
}

void QuasimodularPoly::set(const Monomial& m, const Rational& c) {
  if (m[0] < 0 || m[1] < 0 || m[2] < 0) throw DomainError("negative exponent");
  if (weight(m) > bound_) throw DomainError("monomial exceeds the weight bound " + std::to_string(bound_));
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

Rational QuasimodularPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

QuasimodularPoly QuasimodularPoly::homogeneous_part(int w) const {
  QuasimodularPoly out(w);
  for (const auto& [m, c] : terms_)
    if (weight(m) == w) out.set(m, c);
  return out;
}

QuasimodularPoly QuasimodularPoly::scaled(const Rational& c) const {
  QuasimodularPoly out(bound_);
  for (const auto& [m, v] : terms_) out.set(m, c * v);
  return out;
}

namespace {

QSeries monomial_series(const QuasimodularPoly::Monomial& m, const QSeries& P, const QSeries& Q,
                        const QSeries& R) {
  return P.pow(m[0]) * Q.pow(m[1]) * R.pow(m[2]);
}

}  // namespace

QSeries QuasimodularPoly::q_expansion(int N) const {
  auto P = eisenstein(2, N), Q = eisenstein(4, N), R = eisenstein(6, N);
  QSeries s = QSeries::constant(0, N);
  for (const auto& [m, c] : terms_) s += c * monomial_series(m, P, Q, R);
  return s;
}

std::string QuasimodularPoly::to_json() const {
  nlohmann::ordered_json j;
  j["weight_bound"] = bound_;
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& m : basis(bound_)) {
    auto it = terms_.find(m);
    if (it == terms_.end()) continue;
    j["terms"].push_back({{"P", m[0]}, {"Q", m[1]}, {"R", m[2]}, {"coeff", to_string(it->second)}});
  }
  return j.dump();
}

std::string QuasimodularPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& m : basis(bound_)) {
    auto it = terms_.find(m);
    if (it == terms_.end()) continue;
    std::string mono;
    const char* names = "PQR";
    for (int i = 0; i < 3; ++i) {
      if (!m[i]) continue;
      mono += (mono.empty() ? "" : "*") + std::string(1, names[i]);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    Rational c = it->second;
    if (!s.empty()) {
      s += c < 0 ? " - " : " + ";
      c = abs(c);
    }
    s += mono.empty() ? to_string(c) : (c == 1 ? "" : c == -1 ? "-" : to_string(c) + "*") + mono;
  }
  return s;
}

FitResult fit_quasimodular(const QSeries& s, int W, int margin) {
  if (W < 0) throw DomainError("fit_quasimodular: negative weight bound");
  if (s.low() < 0) throw PreconditionError("fit_quasimodular: series has negative powers");
  auto basis = QuasimodularPoly::basis(W);
  const int dim = static_cast<int>(basis.size());
  const int N = s.high();
  if (N + 1 < dim + margin)
    throw PreconditionError("fit_quasimodular: " + std::to_string(N + 1) + " coefficients supplied, " +
                            std::to_string(dim + margin) + " needed");

  auto P = eisenstein(2, N), Q = eisenstein(4, N), R = eisenstein(6, N);
  std::vector<QSeries> cols;
  for (const auto& m : basis) cols.push_back(monomial_series(m, P, Q, R));

  // Rows in echelon form: pivot column and the row (dim coefficients plus rhs).
  std::vector<std::pair<int, std::vector<Rational>>> rows;
  FitResult result;
  for (int e = 0; e <= N; ++e) {
    std::vector<Rational> row(dim + 1);
    for (int j = 0; j < dim; ++j) row[j] = cols[j].coeff(e);
    row[dim] = s.coeff(e);
    for (const auto& [p, r] : rows) {
      if (row[p] == 0) continue;
      Rational f = row[p];
      for (int j = p; j <= dim; ++j) row[j] -= f * r[j];
    }
    int p = 0;
    while (p < dim && row[p] == 0) ++p;
    if (p == dim) {
      if (row[dim] != 0) {
        result.residual_index = e;
        return result;
      }
      continue;
    }
    Rational inv = 1 / row[p];
    for (int j = p; j <= dim; ++j) row[j] *= inv;
    rows.emplace_back(p, std::move(row));
  }
  if (static_cast<int>(rows.size()) < dim)
    throw PreconditionError("fit_quasimodular: system has rank " + std::to_string(rows.size()) + " < " +
                            std::to_string(dim));

  std::vector<Rational> x(dim);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [p, r] : rows) {
    Rational v = r[dim];
    for (int j = p + 1; j < dim; ++j) v -= r[j] * x[j];
    x[p] = v;
  }
  result.ok = true;
  result.poly = QuasimodularPoly(W);
  for (int j = 0; j < dim; ++j) result.poly.set(basis[j], x[j]);
  return result;
}

}  // namespace hurwitz
