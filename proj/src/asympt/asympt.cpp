#include "mgn/asympt.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

#include "mgn/genexp.hpp"
#include "mgn/tau.hpp"

namespace mgn {

namespace {

// Conservative unit roundoff at the current default precision.
Real unit_roundoff() {
  return boost::multiprecision::pow(Real(10), 1 - static_cast<int>(Real::default_precision()));
}

struct Evaluated {
  Real value;
  Real error;
};

Evaluated bessel_series(BesselKind kind, const Real& z) {
  const int nu = kind == BesselKind::J0 ? 0 : 1;
  const Real q = z * z / 4;
  Real term = nu == 0 ? Real(1) : Real(z / 2);
  Real sum = 0;
  Real magnitude = 0;
  const Real eps = unit_roundoff();
  for (int m = 0;; ++m) {
    sum += term;
    magnitude += abs(term);
    Real next = -term * q / (Real(m + 1) * Real(m + 1 + nu));
    // Once the ratio q / ((m+1)(m+1+nu)) < 1 the tail alternates with
    // decreasing terms and is bounded by the first omitted one.
    const bool decreasing = q < Real(m + 1) * Real(m + 1 + nu);
    if (decreasing && abs(next) <= eps * magnitude) {
      const Real error = abs(next) + magnitude * eps * Real(4 * m + 16);
      return {sum, error};
    }
    term = std::move(next);
    if (m > 100000) throw PrecisionError("bessel_eval: series did not settle");
  }
}

Real default_tolerance() {
  return boost::multiprecision::pow(Real(10), 5 - static_cast<int>(Real::default_precision()));
}

// Sign of J_0(x) when it is certified nonzero, else 0.
int certified_sign(const Real& x) {
  const Evaluated e = bessel_series(BesselKind::J0, x);
  if (abs(e.value) <= e.error) return 0;
  return e.value > 0 ? 1 : -1;
}

Real sqrt_pi() { return sqrt(pi_real()); }

struct LeastSquares {
  std::vector<Real> coefficients;
  Real residual;  // root mean square
};

// Fits ratio(n) by sum_k c_k (n+1)^{-e_k / 2} via the normal equations,
// accumulated in window order.
LeastSquares least_squares(const std::vector<const AsymptoticRow*>& window,
                           const std::vector<int>& half_exponents) {
  const std::size_t k = half_exponents.size();
  std::vector<std::vector<Real>> m(k, std::vector<Real>(k + 1, Real(0)));
  auto basis = [&](int n) {
    std::vector<Real> f;
    for (int e : half_exponents) f.push_back(pow(Real(n + 1), -Real(e) / 2));
    return f;
  };
  for (const AsymptoticRow* row : window) {
    const std::vector<Real> f = basis(row->n);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) m[i][j] += f[i] * f[j];
      m[i][k] += f[i] * row->ratio;
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c) continue;
      const Real factor = m[r][c] / m[c][c];
      for (std::size_t j = c; j <= k; ++j) m[r][j] -= factor * m[c][j];
    }
  }
  LeastSquares out;
  for (std::size_t i = 0; i < k; ++i) out.coefficients.push_back(m[i][k] / m[i][i]);
  Real sq = 0;
  for (const AsymptoticRow* row : window) {
    const std::vector<Real> f = basis(row->n);
    Real e = row->ratio;
    for (std::size_t i = 0; i < k; ++i) e -= out.coefficients[i] * f[i];
    sq += e * e;
  }
  out.residual = sqrt(sq / Real(window.size()));
  return out;
}

}  // namespace

Real bessel_eval(BesselKind kind, const Real& z, const Real& tolerance) {
  const Evaluated e = bessel_series(kind, z);
  if (e.error > tolerance) {
    throw PrecisionError("bessel_eval: error bound " + format_real(e.error, 3) +
                         " exceeds tolerance " + format_real(tolerance, 3) +
                         " at " + std::to_string(Real::default_precision()) +
                         " digits");
  }
  return e.value;
}

Real bessel_eval(BesselKind kind, const Real& z) {
  return bessel_eval(kind, z, default_tolerance());
}

CertifiedRoot solve_j0(const Real& tolerance) {
  if (!(tolerance > 0)) throw std::invalid_argument("solve_j0: tolerance <= 0");
  Real lo = 2, hi = 3;
  if (certified_sign(lo) != 1 || certified_sign(hi) != -1) {
    throw PrecisionError("solve_j0: no certified sign change of J0 on [2, 3]");
  }

  Real x = (lo + hi) / 2;
  for (int iter = 0; iter < 500; ++iter) {
    if (hi - lo <= tolerance) return {(lo + hi) / 2, lo, hi};

    const Evaluated j0 = bessel_series(BesselKind::J0, x);
    const int s = abs(j0.value) <= j0.error ? 0 : (j0.value > 0 ? 1 : -1);
    if (s > 0) lo = x;
    if (s < 0) hi = x;
    if (s == 0) {
      // x is within rounding of the root: try to close the bracket around it.
      const Real half = tolerance / 4;
      if (certified_sign(x - half) == 1 && certified_sign(x + half) == -1) {
        return {x, x - half, x + half};
      }
      throw PrecisionError("solve_j0: cannot certify a bracket of width " +
                           format_real(tolerance, 3) + " at " +
                           std::to_string(Real::default_precision()) + " digits");
    }

    // Newton step (J0' = -J1), falling back to bisection outside the bracket.
    const Real j1 = bessel_series(BesselKind::J1, x).value;
    Real next = x + j0.value / j1;
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    if (next == x) {
      // Newton has converged; probe both sides at the requested width.
      const Real half = tolerance / 4;
      if (certified_sign(x - half) == 1 && certified_sign(x + half) == -1) {
        return {x, x - half, x + half};
      }
      throw PrecisionError("solve_j0: cannot certify a bracket of width " +
                           format_real(tolerance, 3) + " at " +
                           std::to_string(Real::default_precision()) + " digits");
    }
    // Keep the bracket honest: if Newton converges from one side, test a
    // point just past the iterate.
    if (abs(next - x) < (hi - lo) / 4) {
      const Real probe = next + (next - x);
      if (probe > lo && probe < hi) {
        const int ps = certified_sign(probe);
        if (ps > 0) lo = probe;
        if (ps < 0) hi = probe;
      }
    }
    x = std::move(next);
  }
  throw PrecisionError("solve_j0: iteration limit reached");
}

Real gamma_half(int k) {
  if (k <= 0 && k % 2 == 0) {
    throw std::domain_error("gamma_half: pole at " + std::to_string(k) + "/2");
  }
  if (k % 2 == 0) return to_real(Rational(factorial(static_cast<unsigned long>(k / 2 - 1))));
  // Gamma(k/2) = c sqrt(pi): c = 1 at k = 1, Gamma(s+1) = s Gamma(s).
  Rational c(1);
  for (int j = 1; j < k; j += 2) c = c * Rational(j, 2);
  for (int j = 1; j > k; j -= 2) c = c / Rational(j - 2, 2);
  return to_real(c) * sqrt_pi();
}

Real bessel_x_eval(const Real& y) {
  if (y < 0) throw std::domain_error("bessel_x_eval: y < 0");
  const Real r = sqrt(y);
  return r * bessel_eval(BesselKind::J1, 2 * r);
}

Constants constants(unsigned digits, int g_max) {
  if (digits < kMinDigits) {
    throw std::invalid_argument("constants: working precision below " +
                                std::to_string(kMinDigits) + " digits");
  }
  PrecisionScope scope(digits);
  Constants c;
  c.digits = digits;
  c.j0 = solve_j0(boost::multiprecision::pow(Real(10), 10 - static_cast<int>(digits)));

  auto x0_at = [](const Real& j) { return j * bessel_eval(BesselKind::J1, j) / 2; };
  auto a_at = [](const Real& j) { return bessel_eval(BesselKind::J1, j) / j; };
  auto y0_at = [](const Real& j) { return j * j / 4; };

  c.x0 = x0_at(c.j0.value);
  c.y0 = y0_at(c.j0.value);
  c.A = a_at(c.j0.value);
  const Real rounding = default_tolerance();
  auto spread = [&](auto f) {
    return abs(f(c.j0.upper) - f(c.j0.lower)) + rounding;
  };
  c.x0_error = spread(x0_at);
  c.y0_error = spread(y0_at);
  c.A_error = spread(a_at);

  const Real sqrt_a = sqrt(c.A);
  c.B0_derived = pow(c.x0, Real(5) / 2) / (2 * sqrt_pi() * sqrt_a);
  c.B0_printed = 1 / (sqrt_a * gamma_half(-1) * sqrt(c.x0));

  c.B[1] = to_real(Rational(1, 48));
  for (int g = 2; g <= g_max; ++g) {
    const Rational tau = tau_bracket(g, std::vector<int>(3 * g - 3, 2));
    Integer two = 1;
    two <<= 2 * g - 2;
    const Rational denom(Integer(two * factorial(3UL * g - 3)));
    c.B[g] = pow(c.A, Real(g - 1) / 2) * to_real(tau / denom) /
             (gamma_half(5 * g - 5) * pow(c.x0, Real(5 * g - 5) / 2));
  }
  return c;
}

Real leading_constant(const Constants& c, int genus) {
  if (genus == 0) return c.B0_derived;
  auto it = c.B.find(genus);
  if (it == c.B.end()) {
    throw std::out_of_range("leading_constant: genus " + std::to_string(genus) +
                            " not tabulated");
  }
  return it->second;
}

Diagnostics asymptotic_diagnostics(int genus, int n_min, int n_max,
                                   unsigned digits) {
  if (genus < 0) throw std::invalid_argument("asymptotic_diagnostics: genus < 0");
  if (n_min < 0 || n_max - n_min < 10) {
    throw std::invalid_argument(
        "asymptotic_diagnostics: need n_max - n_min >= 10 for the fit");
  }
  const Constants k = constants(digits, std::max(genus, 1));
  PrecisionScope scope(digits);

  const UniSeries phi = phi_series(genus, n_max);
  const Real exponent = Real(5 * genus - 7) / 2;
  auto ratio_at = [&](int n) {
    return to_real(phi[n]) * pow(k.x0, n) * pow(Real(n + 1), -exponent);
  };

  Diagnostics d;
  d.genus = genus;
  d.digits = digits;
  for (int n = n_min; n <= n_max; ++n) d.rows.push_back({n, phi[n], ratio_at(n)});

  const int lo = std::max(n_min, n_max - 50);
  std::vector<const AsymptoticRow*> window;
  for (const AsymptoticRow& row : d.rows) {
    if (row.n >= lo) window.push_back(&row);
  }

  // ratio = B + (B c) / (n+1)
  const auto one = least_squares(window, {0, 2});
  d.fit = {lo, n_max, one.coefficients[0], one.coefficients[1] / one.coefficients[0],
           one.residual};
  const auto half = least_squares(window, {0, 1, 2});
  d.half_fit = {half.coefficients[0], half.coefficients[1], half.coefficients[2],
                half.residual, Real(0)};

  d.target = leading_constant(k, genus);
  d.relative_error = abs(d.fit.B / d.target - 1);
  d.half_fit.relative_error = abs(d.half_fit.B / d.target - 1);

  for (int n : {n_max / 4, n_max / 2, n_max}) {
    d.deviations.push_back({n, abs(ratio_at(n) / d.fit.B - 1)});
  }
  d.monotone = d.deviations[0].value > d.deviations[1].value &&
               d.deviations[1].value > d.deviations[2].value;
  return d;
}

}  // namespace mgn
