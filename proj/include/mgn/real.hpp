#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "mgn/rational.hpp"

namespace mgn {

/// Arbitrary-precision binary float (MPFR). Precision is given in decimal
/// digits and fixed when a value is created. Expression templates are off so
/// that `auto` never captures a reference to a temporary.
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

/// Sets the default precision for newly created Real values and restores the
/// previous default on scope exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits)
      : saved_(Real::default_precision()) {
    Real::default_precision(digits);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// Correctly rounded conversion at the current default precision.
Real to_real(const Rational& r);
Real pi_real();

/// Fixed-point or scientific text with `digits` significant digits.
std::string format_real(const Real& x, unsigned digits);

}  // namespace mgn
