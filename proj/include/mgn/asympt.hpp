#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "mgn/rational.hpp"
#include "mgn/real.hpp"

namespace mgn {

constexpr unsigned kDefaultDigits = 50;
constexpr unsigned kMinDigits = 30;

/// Raised when a requested accuracy cannot be certified at the current
/// working precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class BesselKind { J0, J1 };

/// J_0 or J_1 by the power series. The truncation remainder is bounded by the
/// first omitted term (the tail alternates with decreasing magnitude), and
/// the rounding error by the sum of term magnitudes times the unit roundoff.
/// Throws PrecisionError when that total bound exceeds `tolerance`.
Real bessel_eval(BesselKind kind, const Real& z, const Real& tolerance);
/// Same, with tolerance 10^{-(working digits - 5)}.
Real bessel_eval(BesselKind kind, const Real& z);

struct CertifiedRoot {
  Real value;
  Real lower;  // J_0(lower) > 0 certified
  Real upper;  // J_0(upper) < 0 certified
};

/// First positive zero of J_0, bracketed by a certified sign change of
/// width <= tolerance. Throws PrecisionError when no such bracket can be
/// certified at the working precision.
CertifiedRoot solve_j0(const Real& tolerance);

/// Gamma(k / 2) for integer k not in {0, -2, -4, ...}, as a rational multiple
/// of sqrt(pi) (odd k) or a factorial (even k).
Real gamma_half(int k);

/// x(y) = sqrt(y) J_1(2 sqrt(y)) for y >= 0.
Real bessel_x_eval(const Real& y);

struct Constants {
  unsigned digits = 0;
  CertifiedRoot j0;
  Real x0, y0, A;
  std::map<int, Real> B;  // leading constants B_g, g >= 1
  Real B0_derived;        // x0^{5/2} / (2 sqrt(pi) A^{1/2})
  Real B0_printed;        // 1 / (A^{1/2} Gamma(-1/2) x0^{1/2})
  /// Absolute error bounds, propagated from the j0 bracket plus rounding.
  Real x0_error, y0_error, A_error;
};

/// Throws std::invalid_argument for digits < kMinDigits.
Constants constants(unsigned digits = kDefaultDigits, int g_max = 4);

/// Leading constant used as the fit target: B0_derived for g = 0, B_g else.
Real leading_constant(const Constants& c, int genus);

struct AsymptoticRow {
  int n;
  Rational lhs;  // V_{g,n} / (n! (n+3g-3)!)
  Real ratio;    // lhs x0^n (n+1)^{-(5g-7)/2}
};

struct AsymptoticFit {
  int window_lo, window_hi;
  Real B, c;
  Real residual;  // root mean square over the window
};

/// Supplementary fit ratio(n) = B + c_half (n+1)^{-1/2} + c_one (n+1)^{-1}
/// on the same window. For g >= 1 the singular expansion of phi_g mixes
/// integer and half-integer powers of (x0 - x), so the ratio carries
/// n^{-1/2} corrections that the one-term model cannot absorb.
struct HalfIntegerFit {
  Real B, c_half, c_one;
  Real residual;
  Real relative_error;  // |B / target - 1|
};

struct Deviation {
  int n;
  Real value;  // |ratio(n) / fit.B - 1|
};

struct Diagnostics {
  int genus;
  unsigned digits;
  std::vector<AsymptoticRow> rows;
  AsymptoticFit fit;
  Real target;
  Real relative_error;  // |B / target - 1|
  std::vector<Deviation> deviations;  // at n_max/4, n_max/2, n_max
  bool monotone;
  HalfIntegerFit half_fit;
};

/// Rows for n_min <= n <= n_max and a least-squares fit of
/// ratio(n) = B (1 + c/(n+1)) on [max(n_min, n_max - 50), n_max].
/// Throws std::invalid_argument when n_max - n_min < 10.
Diagnostics asymptotic_diagnostics(int genus, int n_min, int n_max,
                                   unsigned digits = kDefaultDigits);

}  // namespace mgn
