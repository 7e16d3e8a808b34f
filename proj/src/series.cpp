#include "hurwitz/series.hpp"

#include <json.hpp>

#include <algorithm>

namespace hurwitz {

QSeries::QSeries(std::string var, int low, std::vector<Rational> coeffs)
    : var_(std::move(var)), low_(low), coeffs_(std::move(coeffs)) {}

QSeries QSeries::constant(const Rational& c, int high, std::string var) { return monomial(c, 0, high, std::move(var)); }

QSeries QSeries::monomial(const Rational& c, int exponent, int high, std::string var) {
  if (high < exponent) return QSeries(std::move(var), exponent, {});
  std::vector<Rational> v(high - exponent + 1, Rational(0));
  v[0] = c;
  return QSeries(std::move(var), exponent, std::move(v));
}

QSeries QSeries::from_function(int low, int high, const std::function<Rational(int)>& f, std::string var) {
  std::vector<Rational> v;
  for (int e = low; e <= high; ++e) v.push_back(f(e));
  return QSeries(std::move(var), low, std::move(v));
}

Rational QSeries::coeff(int e) const {
  if (e < low_) return 0;
  if (e > high())
    throw RangeError("coefficient of " + var_ + "^" + std::to_string(e) + " beyond known order " +
                     std::to_string(high()));
  return coeffs_[e - low_];
}

QSeries QSeries::normalized() const {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) return *this;
  return QSeries(var_, low_ + static_cast<int>(lead), std::vector<Rational>(coeffs_.begin() + lead, coeffs_.end()));
}

QSeries QSeries::truncated(int h) const {
  if (h >= high()) return *this;
  if (h < low_) return QSeries(var_, low_, {});
  return QSeries(var_, low_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + (h - low_ + 1)));
}

QSeries QSeries::scaled_variable(const Rational& c) const {
  QSeries r = *this;
  for (int e = low_; e <= high(); ++e) r.coeffs_[e - low_] *= rpow(c, e);
  return r;
}

QSeries QSeries::shifted(int k) const {
  QSeries r = *this;
  r.low_ += k;
  return r;
}

QSeries QSeries::euler_derivative() const {
  QSeries r = *this;
  for (int e = low_; e <= high(); ++e) r.coeffs_[e - low_] *= e;
  return r;
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

namespace {

void same_var(const QSeries& a, const QSeries& b) {
  if (a.var() != b.var()) throw DomainError("series in different variables: " + a.var() + ", " + b.var());
}

}  // namespace

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  same_var(a, b);
  int lo = std::min(a.low(), b.low()), hi = std::min(a.high(), b.high());
  return QSeries::from_function(lo, hi, [&](int e) -> Rational { return a.coeff(e) + b.coeff(e); }, a.var());
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  same_var(a, b);
  int lo = a.low() + b.low();
  int hi = std::min(a.high() + b.low(), b.high() + a.low());
  std::vector<Rational> v(std::max(0, hi - lo + 1), Rational(0));
  for (int i = a.low(); i <= a.high() && i + b.low() <= hi; ++i) {
    const Rational& ai = a.coeffs()[i - a.low()];
    if (ai == 0) continue;
    for (int j = b.low(); j <= b.high() && i + j <= hi; ++j) v[i + j - lo] += ai * b.coeffs()[j - b.low()];
  }
  return QSeries(a.var(), lo, std::move(v));
}

QSeries operator*(const Rational& c, const QSeries& a) {
  std::vector<Rational> v = a.coeffs();
  for (auto& x : v) x *= c;
  return QSeries(a.var(), a.low(), std::move(v));
}

QSeries QSeries::inverse() const {
  QSeries n = normalized();
  if (n.coeffs_.empty() || n.coeffs_[0] == 0) throw DomainError("series has no invertible leading coefficient");
  int rel = n.high() - n.low();
  std::vector<Rational> inv(rel + 1);
  Rational lead_inv = 1 / n.coeffs_[0];
  inv[0] = lead_inv;
  for (int e = 1; e <= rel; ++e) {
    Rational s = 0;
    for (int j = 1; j <= e; ++j) s += n.coeffs_[j] * inv[e - j];
    inv[e] = -s * lead_inv;
  }
  return QSeries(var_, -n.low(), std::move(inv));
}

QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.inverse(); }

QSeries QSeries::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  if (n == 0) return constant(1, normalized().high() - normalized().low(), var_);
  QSeries r = *this;
  for (int i = 1; i < n; ++i) r = r * *this;
  return r;
}

QSeries QSeries::log() const {
  QSeries f = *this;
  for (int e = f.low(); e < 0 && e <= f.high(); ++e)
    if (f.coeff(e) != 0) throw DomainError("log of a series with negative powers");
  if (f.high() < 0 || f.coeff(0) != 1) throw DomainError("log needs constant term 1");
  int hi = f.high();
  std::vector<Rational> g(hi + 1, Rational(0));
  for (int e = 1; e <= hi; ++e) {
    Rational s = 0;
    for (int j = 1; j < e; ++j) s += j * g[j] * f.coeff(e - j);
    g[e] = f.coeff(e) - s / e;
  }
  return QSeries(var_, 0, std::move(g));
}

QSeries QSeries::exp() const {
  for (int e = low_; e <= 0 && e <= high(); ++e)
    if (coeff(e) != 0) throw DomainError("exp needs a series without constant or negative terms");
  int hi = high();
  if (hi < 0) throw DomainError("exp of a series with empty window");
  std::vector<Rational> g(hi + 1, Rational(0));
  g[0] = 1;
  for (int e = 1; e <= hi; ++e) {
    Rational s = 0;
    for (int j = 1; j <= e; ++j) s += j * coeff(j) * g[e - j];
    g[e] = s / e;
  }
  return QSeries(var_, 0, std::move(g));
}

bool QSeries::agrees_with(const QSeries& o) const {
  if (var_ != o.var_) return false;
  int lo = std::min(low_, o.low_), hi = std::min(high(), o.high());
  for (int e = lo; e <= hi; ++e)
    if (coeff(e) != o.coeff(e)) return false;
  return true;
}

std::string QSeries::to_json() const {
  nlohmann::ordered_json j;
  j["var"] = var_;
  j["low"] = low_;
  j["coeffs"] = nlohmann::ordered_json::array();
  for (const auto& c : coeffs_) j["coeffs"].push_back(to_string(c));
  return j.dump();
}

QSeries QSeries::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    std::vector<Rational> v;
    for (const auto& c : j.at("coeffs")) v.push_back(parse_rational(c.get<std::string>()));
    return QSeries(j.value("var", std::string("q")), j.value("low", 0), std::move(v));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad series document: ") + e.what());
  }
}

BiSeries::BiSeries(int d_max, int p_low, int p_high) : d_max_(d_max), p_low_(p_low), p_high_(p_high) {
  if (d_max < 0) throw DomainError("negative d_max");
  int width = std::max(0, p_high - p_low + 1);
  if (p_high < p_low) p_high_ = p_low - 1;
  cells_.assign((d_max + 1) * width, Rational(0));
  mask_.assign(cells_.size(), 1);
}

bool BiSeries::known(int d, int p) const {
  if (d < 0) return true;
  if (d > d_max_) return false;
  if (p < p_low_) return true;
  if (p > p_high_) return false;
  return mask_[index(d, p)] != 0;
}

Rational BiSeries::get(int d, int p) const {
  if (!known(d, p))
    throw RangeError("coefficient x^" + std::to_string(d) + " h^" + std::to_string(p) + " outside the known window");
  if (d < 0 || p < p_low_) return 0;
  return cells_[index(d, p)];
}

void BiSeries::set(int d, int p, const Rational& v) {
  if (d < 0 || d > d_max_ || p < p_low_ || p > p_high_) throw RangeError("cell outside the grid");
  cells_[index(d, p)] = v;
  mask_[index(d, p)] = 1;
}

void BiSeries::forget(int d, int p) {
  if (d < 0 || d > d_max_ || p < p_low_ || p > p_high_) return;
  cells_[index(d, p)] = 0;
  mask_[index(d, p)] = 0;
}

int BiSeries::known_count() const { return static_cast<int>(std::count(mask_.begin(), mask_.end(), 1)); }

bool BiSeries::known_zero() const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (mask_[i] && cells_[i] != 0) return false;
  return true;
}

namespace {

bool known_and_zero(const BiSeries& s, int d, int p) { return s.known(d, p) && s.get(d, p) == 0; }

}  // namespace

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  BiSeries r(std::min(a.d_max(), b.d_max()), std::min(a.p_low(), b.p_low()), std::min(a.p_high(), b.p_high()));
  for (int d = 0; d <= r.d_max(); ++d)
    for (int p = r.p_low(); p <= r.p_high(); ++p) {
      if (a.known(d, p) && b.known(d, p))
        r.set(d, p, a.get(d, p) + b.get(d, p));
      else
        r.forget(d, p);
    }
  return r;
}

BiSeries operator*(const Rational& c, const BiSeries& a) {
  BiSeries r = a;
  for (int d = 0; d <= a.d_max(); ++d)
    for (int p = a.p_low(); p <= a.p_high(); ++p)
      if (a.known(d, p)) r.set(d, p, c * a.get(d, p));
  return r;
}

BiSeries operator-(const BiSeries& a, const BiSeries& b) { return a + Rational(-1) * b; }

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  BiSeries r(std::min(a.d_max(), b.d_max()), a.p_low() + b.p_low(), a.p_high() + b.p_high());
  for (int d = 0; d <= r.d_max(); ++d)
    for (int p = r.p_low(); p <= r.p_high(); ++p) {
      Rational s = 0;
      bool ok = true;
      for (int d1 = 0; d1 <= d && ok; ++d1)
        for (int p1 = a.p_low(); p1 <= p - b.p_low() && ok; ++p1) {
          int d2 = d - d1, p2 = p - p1;
          bool ka = a.known(d1, p1), kb = b.known(d2, p2);
          if (ka && kb) {
            s += a.get(d1, p1) * b.get(d2, p2);
          } else if (!((ka && known_and_zero(a, d1, p1)) || (kb && known_and_zero(b, d2, p2)))) {
            ok = false;
          }
        }
      if (ok)
        r.set(d, p, s);
      else
        r.forget(d, p);
    }
  return r;
}

namespace {

// Row of a BiSeries as a truncated series in h; row 0 of the log/exp input is
// an exact constant and never multiplied.
BiSeries row_of(const BiSeries& s, int d) {
  BiSeries r(0, s.p_low(), s.p_high());
  for (int p = s.p_low(); p <= s.p_high(); ++p) {
    if (s.known(d, p))
      r.set(0, p, s.get(d, p));
    else
      r.forget(0, p);
  }
  return r;
}

void put_row(BiSeries& s, int d, const BiSeries& row) {
  for (int p = s.p_low(); p <= s.p_high(); ++p) {
    if (row.known(0, p))
      s.set(d, p, row.get(0, p));
    else
      s.forget(d, p);
  }
}

BiSeries assemble_rows(const std::vector<BiSeries>& rows, int p_high) {
  int lo = p_high;
  for (const auto& r : rows) lo = std::min(lo, r.p_low());
  BiSeries out(static_cast<int>(rows.size()) - 1, lo, p_high);
  for (std::size_t d = 0; d < rows.size(); ++d) put_row(out, static_cast<int>(d), rows[d]);
  return out;
}

void check_row0(const BiSeries& s, bool want_one) {
  for (int p = s.p_low(); p <= s.p_high(); ++p) {
    Rational want = (want_one && p == 0) ? 1 : 0;
    if (!s.known(0, p) || s.get(0, p) != want)
      throw DomainError(want_one ? "log needs the x^0 row to be exactly 1" : "exp needs the x^0 row to be zero");
  }
  if (want_one && (s.p_low() > 0 || s.p_high() < 0)) throw DomainError("log needs the constant term in the grid");
}

}  // namespace

BiSeries BiSeries::log() const {
  check_row0(*this, true);
  // d Z_d = sum_{j=1}^{d} j G_j Z_{d-j}
  std::vector<BiSeries> G;
  G.push_back(BiSeries(0, p_low_, p_high_));
  for (int d = 1; d <= d_max_; ++d) {
    BiSeries acc = row_of(*this, d);
    for (int j = 1; j < d; ++j) acc = acc - make_rational(j, d) * (G[j] * row_of(*this, d - j));
    G.push_back(acc);
  }
  return assemble_rows(G, p_high_);
}

BiSeries BiSeries::exp() const {
  check_row0(*this, false);
  std::vector<BiSeries> E;
  BiSeries one(0, p_low_, p_high_);
  if (p_low_ <= 0 && p_high_ >= 0) one.set(0, 0, 1);
  E.push_back(one);
  for (int d = 1; d <= d_max_; ++d) {
    BiSeries acc(0, p_low_, p_high_);
    for (int j = 1; j <= d; ++j) {
      BiSeries term = j == d ? row_of(*this, j) : row_of(*this, j) * E[d - j];
      acc = acc + make_rational(j, d) * term;
    }
    E.push_back(acc);
  }
  return assemble_rows(E, p_high_);
}

}  // namespace hurwitz
