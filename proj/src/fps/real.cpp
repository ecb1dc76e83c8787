#include "mgn/real.hpp"

#include <mpfr.h>

#include <ios>

namespace mgn {

Real to_real(const Rational& r) {
  Real out;
  mpfr_set_q(out.backend().data(), r.raw().get_mpq_t(), MPFR_RNDN);
  return out;
}

Real pi_real() {
  Real out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

std::string format_real(const Real& x, unsigned digits) {
  return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

}  // namespace mgn
