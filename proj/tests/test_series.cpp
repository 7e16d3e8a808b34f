#include <doctest.h>

#include "hurwitz/series.hpp"

#include <random>

using namespace hurwitz;

namespace {

QSeries poly(std::vector<Rational> c, int low = 0, std::string var = "q") {
  return QSeries(std::move(var), low, std::move(c));
}

QSeries random_series(std::mt19937& rng, int low, int high) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  return QSeries::from_function(low, high, [&](int) { return make_rational(num(rng), den(rng)); });
}

// sinh(z/2)/(z/2) by its defining power series
QSeries S_series(int order) {
  return QSeries::from_function(0, order, [](int e) -> Rational {
    if (e % 2) return 0;
    return make_rational(1, factorial(e + 1) * ipow(Integer(2), e));
  }, "z");
}

}  // namespace

TEST_CASE("log and exp") {
  auto l = poly({1, 1, 0, 0, 0}).log();
  CHECK(l.agrees_with(poly({0, 1, Rational(-1, 2), Rational(1, 3), Rational(-1, 4)})));
  CHECK(l.high() == 4);

  auto f = poly({1, 2, 3});
  CHECK(f.log().exp().agrees_with(f));

  // log of prod (1 - q^n)^{-1}
  QSeries prod = QSeries::constant(1, 4);
  for (int n = 1; n <= 4; ++n) {
    std::vector<Rational> c(5, 0);
    c[0] = 1;
    c[n] = -1;
    prod = prod / poly(c);
  }
  CHECK(prod.log().agrees_with(poly({0, 1, Rational(3, 2), Rational(4, 3), Rational(7, 4)})));

  auto e = poly({0, 1, Rational(1, 2), Rational(1, 6)}, 0);
  CHECK(e.exp().log().agrees_with(e));
  CHECK_THROWS_AS(poly({2, 1}).log(), DomainError);
  CHECK_THROWS_AS(poly({1, 1}).exp(), DomainError);
}

TEST_CASE("coefficient extraction respects the window") {
  auto S = S_series(6);
  CHECK(S.coeff(2) == Rational(1, 24));
  CHECK(S.coeff(0) == 1);
  CHECK_THROWS_AS(S.coeff(7), RangeError);

  // 1/(2 sinh(z/2)) = 1/(z S(z))
  auto sig = S.inverse().shifted(-1);
  CHECK(sig.low() == -1);
  CHECK(sig.coeff(-1) == 1);
  CHECK(sig.coeff(1) == Rational(-1, 24));
  CHECK(sig.coeff(3) == Rational(7, 5760));
  CHECK_THROWS_AS(sig.coeff(6), RangeError);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(rng, 0, 8), b = random_series(rng, -1, 6), c = random_series(rng, 1, 9);
    CHECK(((a * b) * c).agrees_with(a * (b * c)));
    CHECK((a * (b + c)).agrees_with(a * b + a * c));
    CHECK((a * b).agrees_with(b * a));
    auto n = b.normalized();
    if (!n.coeffs().empty() && n.coeffs()[0] != 0) CHECK(((a / b) * b).agrees_with(a));
    CHECK((a * b).low() == a.low() + b.low());
  }
}

TEST_CASE("truncation is tracked") {
  auto a = poly({1, 1, 1}), b = poly({1, 2, 3, 4, 5});
  CHECK((a + b).high() == 2);
  CHECK((a * b).high() == 2);
  CHECK((a.shifted(2) * b).high() == 4);
  CHECK_THROWS_AS((a * b).coeff(3), RangeError);
  CHECK(poly({0, 0, 1, 1}).inverse().low() == -2);
}

TEST_CASE("json round trip") {
  auto s = poly({1, -24, Rational(-72, 5)}, -1);
  CHECK(s.to_json() == R"({"var":"q","low":-1,"coeffs":["1","-24","-72/5"]})");
  CHECK(QSeries::from_json(s.to_json()).agrees_with(s));
  CHECK_THROWS_AS(QSeries::from_json("{\"coeffs\":[1]}"), DomainError);
}

TEST_CASE("bivariate grids") {
  BiSeries a(3, 0, 3), b(3, 0, 3);
  a.set(0, 0, 1);
  a.set(1, 1, 2);
  b.set(1, 0, 1);
  auto c = a * b;
  CHECK(c.get(1, 0) == 1);
  CHECK(c.get(2, 1) == 2);
  CHECK(c.known(3, 3));
  CHECK(!c.known(3, 4));
  CHECK_THROWS_AS(c.get(4, 0), RangeError);
  CHECK(c.get(-1, 0) == 0);

  a.forget(2, 2);
  auto d = a + b;
  CHECK(!d.known(2, 2));
  CHECK(d.known(2, 1));

  // log / exp round trip on 1 + x h + x^2 h^2 / 2 + ...
  BiSeries z(4, 0, 4);
  for (int k = 0; k <= 4; ++k) z.set(k, k, make_rational(1, factorial(k)));
  auto lz = z.log();
  CHECK(lz.get(1, 1) == 1);
  CHECK(lz.get(2, 2) == 0);
  CHECK(lz.get(3, 3) == 0);
  auto back = lz.exp();
  for (int k = 0; k <= 4; ++k) CHECK(back.get(k, k) == make_rational(1, factorial(k)));
  CHECK_THROWS_AS(lz.log(), DomainError);
}
