#include "mgn/rational.hpp"

#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace mgn {

Rational::Rational(const Integer& n, const Integer& d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) {
      throw std::invalid_argument("Rational::parse: malformed '" +
                                  std::string(text) + "'");
    }
    for (std::size_t k = i; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') {
        throw std::invalid_argument("Rational::parse: malformed '" +
                                    std::string(text) + "'");
      }
    }
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return Integer(digits, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, true));
  const Integer n = parse_int(text.substr(0, slash), true);
  const Integer d = parse_int(text.substr(slash + 1), false);
  if (d == 0) {
    throw std::invalid_argument("Rational::parse: zero denominator in '" +
                                std::string(text) + "'");
  }
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::abs() const {
  mpq_class r = value_;
  if (sign() < 0) r = -r;
  return Rational(std::move(r));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational pow(const Rational& r, long e) {
  if (e < 0) return pow(r.inverse(), -e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer double_factorial(long m) {
  if (m < -1) throw std::domain_error("double_factorial: argument below -1");
  if (m <= 0) return 1;
  Integer r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

std::size_t hash_value(const Rational& r) {
  const std::size_t h1 = std::hash<std::string>{}(r.num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(r.den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

}  // namespace mgn
