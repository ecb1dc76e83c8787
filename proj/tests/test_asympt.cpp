#include <doctest.h>

#include "mgn/asympt.hpp"
#include "mgn/genexp.hpp"

using namespace mgn;

TEST_CASE("Bessel evaluation") {
  PrecisionScope scope(50);
  CHECK(bessel_eval(BesselKind::J0, Real(0)) == 1);
  CHECK(bessel_eval(BesselKind::J1, Real(0)) == 0);
  CHECK(abs(bessel_eval(BesselKind::J0, Real("2.404825557695773"))) < Real("1e-12"));
  CHECK(bessel_eval(BesselKind::J0, Real("2.40")) > 0);
  CHECK(bessel_eval(BesselKind::J0, Real("2.41")) < 0);
  // J_1(1) = 0.4400505857449335...
  CHECK(abs(bessel_eval(BesselKind::J1, Real(1)) - Real("0.44005058574493351595968220371891491")) <
        Real("1e-34"));
  CHECK_THROWS_AS(bessel_eval(BesselKind::J0, Real(16), Real("1e-200")), PrecisionError);
}

TEST_CASE("first zero of J0") {
  PrecisionScope scope(50);
  const CertifiedRoot r = solve_j0(Real("1e-15"));
  CHECK(abs(r.value - Real("2.404825557695773")) < Real("1e-15"));
  CHECK(r.upper - r.lower <= Real("1e-15"));
  CHECK(bessel_eval(BesselKind::J0, r.lower) > 0);
  CHECK(bessel_eval(BesselKind::J0, r.upper) < 0);
  CHECK_THROWS_AS(solve_j0(Real("1e-200")), PrecisionError);
  CHECK_THROWS_AS(solve_j0(Real(0)), std::invalid_argument);
}

TEST_CASE("Gamma at half integers") {
  PrecisionScope scope(40);
  const Real sqrt_pi = sqrt(pi_real());
  CHECK(abs(gamma_half(1) - sqrt_pi) < Real("1e-38"));
  CHECK(abs(gamma_half(5) - Real(3) / 4 * sqrt_pi) < Real("1e-38"));
  CHECK(abs(gamma_half(-1) + 2 * sqrt_pi) < Real("1e-38"));
  CHECK(gamma_half(8) == 6);
  CHECK_THROWS_AS(gamma_half(0), std::domain_error);
  CHECK_THROWS_AS(gamma_half(-4), std::domain_error);
}

TEST_CASE("constants") {
  const Constants c = constants(50, 3);
  PrecisionScope scope(50);
  CHECK(abs(c.x0 - Real("0.6242296")) < Real("1e-7"));
  CHECK(abs(c.y0 - Real("1.44580")) < Real("1e-5"));
  // J_1(j_0) = 0.51914749728946679...
  CHECK(abs(c.A - Real("0.5191474972894667") / Real("2.404825557695773")) < Real("1e-14"));
  CHECK(c.x0 > 0);
  CHECK(c.y0 > 0);
  CHECK(c.A > 0);
  CHECK(c.B.at(1) == Real(1) / 48);
  const Real b2 = sqrt(c.A) * Real(7) / 240 / (4 * 6 * gamma_half(5) * pow(c.x0, Real(5) / 2));
  CHECK(abs(c.B.at(2) / b2 - 1) < Real("1e-40"));
  CHECK(abs(c.B.at(2) - Real("1.38e-3")) < Real("1e-5"));
  CHECK(c.B0_printed < 0);
  CHECK(c.B0_derived > 0);
  CHECK(c.x0_error < Real("1e-30"));
  CHECK_THROWS_AS(constants(20), std::invalid_argument);
}

TEST_CASE("x(y) increases on (0, y0)") {
  const Constants c = constants(40, 1);
  PrecisionScope scope(40);
  Real prev = -1;
  for (int i = 1; i <= 20; ++i) {
    const Real x = bessel_x_eval(c.y0 * i / 21);
    CHECK(x > prev);
    prev = x;
  }
  CHECK(abs(bessel_x_eval(c.y0) - c.x0) < Real("1e-30"));
}

TEST_CASE("asymptotic diagnostics contract") {
  CHECK_THROWS_AS(asymptotic_diagnostics(1, 50, 55), std::invalid_argument);
  const Diagnostics d = asymptotic_diagnostics(1, 20, 60, 40);
  CHECK(d.rows.size() == 41);
  CHECK(d.rows.front().n == 20);
  CHECK(d.fit.window_lo == 20);
  CHECK(d.fit.window_hi == 60);
  CHECK(d.deviations.size() == 3);
  CHECK(d.rows.back().lhs == phi_series(1, 60)[60]);

  const Diagnostics again = asymptotic_diagnostics(1, 20, 60, 40);
  for (std::size_t i = 0; i < d.rows.size(); ++i) CHECK(d.rows[i].ratio == again.rows[i].ratio);
  CHECK(d.fit.B == again.fit.B);
}
