#include <doctest.h>

#include <random>

#include "mgn/diffpoly.hpp"
#include "mgn/multipoly.hpp"
#include "mgn/rational.hpp"
#include "mgn/series.hpp"

using namespace mgn;

namespace {

UniSeries poly(std::vector<Rational> c, int order) { return UniSeries(std::move(c), order); }

struct RandomSeries {
  std::mt19937 rng{20240611};

  Rational coeff() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
    return Rational(Integer(num(rng)), Integer(den(rng)));
  }

  UniSeries series(int order, bool unit_constant = false, bool zero_constant = false) {
    std::vector<Rational> c;
    for (int k = 0; k <= order; ++k) c.push_back(coeff());
    if (unit_constant) c[0] = 1;
    if (zero_constant) c[0] = 0;
    return UniSeries(std::move(c), order);
  }

  int order() { return std::uniform_int_distribution<int>(1, 7)(rng); }
};

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  CHECK(factorial(5) == 120);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("rational text round trip") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int i = 0; i < 200; ++i) {
    const long den = d(rng);
    if (den == 0) continue;
    const Rational r(Integer(d(rng)), Integer(den));
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("series examples") {
  const UniSeries a = poly({1, 1}, 4), b = poly({1, -1}, 4);
  CHECK(a * b == poly({1, 0, -1}, 4));

  for (int order : {1, 5, 12}) {
    const UniSeries one_plus_x = poly({1, 1}, order);
    CHECK(exp(log(one_plus_x)) == one_plus_x);
  }

  CHECK(derivative(poly({0, 0, 0, Rational(1, 6)}, 5)) == poly({0, 0, Rational(1, 2)}, 4));
  CHECK(antiderivative(poly({1}, 3)).order() == 4);
}

TEST_CASE("series orders propagate to the minimum") {
  const UniSeries a = poly({1, 2, 3}, 6), b = poly({1, 1}, 3);
  CHECK((a + b).order() == 3);
  CHECK((a * b).order() == 3);
  CHECK((a / b).order() == 3);
  CHECK(derivative(b).order() == 2);
}

TEST_CASE("series errors name the operand") {
  const UniSeries z = poly({0, 1}, 4);
  try {
    (void)(poly({1}, 4) / z);
    FAIL("expected SeriesError");
  } catch (const SeriesError& e) {
    CHECK(e.kind() == SeriesError::Kind::ZeroDivisor);
    CHECK(e.operand() == "divisor");
  }
  CHECK_THROWS_AS(log(poly({2, 1}, 3)), SeriesError);
  CHECK_THROWS_AS(exp(poly({1, 1}, 3)), SeriesError);
  CHECK_THROWS_AS(compose(poly({0, 1}, 3), poly({1, 1}, 3)), SeriesError);
  CHECK_THROWS_AS(derivative(UniSeries(0)), SeriesError);
  try {
    (void)revert(poly({0, 0, 1}, 4));
    FAIL("expected SeriesError");
  } catch (const SeriesError& e) {
    CHECK(e.kind() == SeriesError::Kind::NotInvertible);
  }
}

TEST_CASE("revert against a fixed-point oracle") {
  CHECK(revert(poly({0, 1}, 6)) == poly({0, 1}, 6));

  // y = x + y^2 solves x = y - y^2.
  const int order = 10;
  const UniSeries x = UniSeries::identity(order);
  UniSeries y = x;
  for (int i = 0; i < order; ++i) y = x + y * y;
  const UniSeries r = revert(poly({0, 1, -1}, order));
  CHECK(r == y);
  CHECK(r.truncated(4) == poly({0, 1, 1, 2, 5}, 4));

  // x - x^2/2 + x^3/12 - x^4/144
  const UniSeries bessel = poly({0, 1, Rational(-1, 2), Rational(1, 12), Rational(-1, 144)}, 4);
  CHECK(revert(bessel).truncated(3) == poly({0, 1, Rational(1, 2), Rational(5, 12)}, 3));
}

TEST_CASE("random series: ring axioms and inverse pairs") {
  RandomSeries gen;
  int cases = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = gen.order();
    const UniSeries a = gen.series(n), b = gen.series(n), c = gen.series(n);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == UniSeries(n));

    const UniSeries u = gen.series(n, true);
    CHECK(u * (UniSeries::constant(1, n) / u) == UniSeries::constant(1, n));
    CHECK((a / u) * u == a);
    CHECK(exp(log(u)) == u);
    CHECK(pow(pow(u, Rational(1, 3)), 3L) == u);
    CHECK(derivative(antiderivative(a)) == a);

    UniSeries f = gen.series(n, false, true);
    if (f[1].is_zero()) continue;
    const UniSeries g = revert(f);
    CHECK(compose(f, g) == UniSeries::identity(n));
    CHECK(compose(g, f) == UniSeries::identity(n));
    ++cases;
  }
  CHECK(cases > 800);
}

TEST_CASE("multipoly examples") {
  const std::vector<int> w{1, 2};
  const MultiPoly s1 = MultiPoly::variable(w, 6, 0);
  const MultiPoly s2 = MultiPoly::variable(w, 6, 1);
  CHECK(s1 * s1 == MultiPoly(w, 6, {{{2}, 1}}));

  const MultiPoly half_sq = (s1 * s1).scaled(Rational(1, 2));
  const MultiPoly images[] = {s1, s2 + half_sq};
  CHECK((s2 - half_sq).substitute(images) == s2);

  CHECK_THROWS_AS(s1 + MultiPoly::variable({1, 1}, 6, 0), WeightMismatch);
  CHECK((s2 * s2 * s2 * s1).is_zero());  // weight 7 > 6
  CHECK((MultiPoly(w, 3) + s1).truncation() == 3);
}

TEST_CASE("multipoly substitution rejects low-weight images") {
  const std::vector<int> w{1, 2};
  const MultiPoly s1 = MultiPoly::variable(w, 4, 0);
  const MultiPoly s2 = MultiPoly::variable(w, 4, 1);
  const MultiPoly images[] = {s1, s1};
  CHECK_THROWS_AS(s2.substitute(images), std::invalid_argument);
}

TEST_CASE("diffpoly derivation") {
  CHECK(derive(DiffPoly::u(1)) == DiffPoly::u(2));
  CHECK(derive(DiffPoly::u(1, -1)) == -(DiffPoly::u(2) * DiffPoly::u(1, -2)));

  const DiffPoly i1 = DiffPoly::constant(1) - DiffPoly::u(1, -1);
  const DiffPoly i2 = derive(i1) * DiffPoly::u(1, -1);
  CHECK(i2 == DiffPoly::u(2) * DiffPoly::u(1, -3));
  CHECK(derive(DiffPoly::constant(5)).is_zero());
  CHECK_THROWS(DiffPoly::u(2, -1));
}

TEST_CASE("diffpoly Leibniz rule on random products") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> k(1, 4), e(-2, 3), c(-5, 5);
  auto random_poly = [&] {
    DiffPoly p;
    for (int t = 0; t < 3; ++t) {
      const int var = k(rng);
      const int ex = var == 1 ? e(rng) : std::abs(e(rng));
      p = p + (DiffPoly::u(var, ex) * DiffPoly::u(k(rng))).scaled(c(rng));
    }
    return p;
  };
  for (int i = 0; i < 200; ++i) {
    const DiffPoly a = random_poly(), b = random_poly();
    CHECK(derive(a * b) == derive(a) * b + a * derive(b));
    CHECK(derive(a + b) == derive(a) + derive(b));
  }
}
