#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgn/rational.hpp"

namespace mgn {

/// Raised when a series operation is applied outside its domain. `operand`
/// names the argument that violated the precondition.
class SeriesError : public std::domain_error {
 public:
  enum class Kind {
    ZeroDivisor,          // divisor has zero constant term
    LogConstantTerm,      // log argument does not start with 1
    ExpConstantTerm,      // exp argument has nonzero constant term
    PowConstantTerm,      // rational power of a series not starting with 1
    ComposeConstantTerm,  // inner series of a composition has f(0) != 0
    NotInvertible,        // reversion of a series with f(0) != 0 or f'(0) == 0
    OrderUnderflow,       // derivative of an order-0 series
  };

  SeriesError(Kind kind, std::string operand, const std::string& what)
      : std::domain_error(what), kind_(kind), operand_(std::move(operand)) {}

  Kind kind() const noexcept { return kind_; }
  const std::string& operand() const noexcept { return operand_; }

 private:
  Kind kind_;
  std::string operand_;
};

/// Truncated power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
///
/// The order N is part of the value: binary operations produce a result
/// known only to the smaller operand order, and derivatives lose one order.
class UniSeries {
 public:
  explicit UniSeries(int order);
  /// Coefficients beyond `order` are dropped; missing ones are zero.
  UniSeries(std::vector<Rational> coefficients, int order);

  static UniSeries constant(const Rational& c, int order);
  static UniSeries identity(int order);  // the series x

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_.at(k); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  UniSeries truncated(int order) const;

  UniSeries& operator+=(const UniSeries& o);
  UniSeries& operator-=(const UniSeries& o);
  friend UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
  friend UniSeries operator-(UniSeries a, const UniSeries& b) { return a -= b; }
  friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
  friend UniSeries operator/(const UniSeries& a, const UniSeries& b);
  UniSeries operator-() const;
  UniSeries scaled(const Rational& c) const;

  friend bool operator==(const UniSeries&, const UniSeries&) = default;

  std::string str(const std::string& var = "x") const;

 private:
  std::vector<Rational> coeffs_;
};

UniSeries exp(const UniSeries& f);
UniSeries log(const UniSeries& f);
/// f^e for an integer exponent; negative e requires f(0) != 0.
UniSeries pow(const UniSeries& f, long e);
/// f^alpha for a rational exponent; requires f(0) == 1.
UniSeries pow(const UniSeries& f, const Rational& alpha);
UniSeries derivative(const UniSeries& f);
/// Integral from 0; the result has zero constant term and one more order.
UniSeries antiderivative(const UniSeries& f);
/// outer(inner(x)); requires inner(0) == 0.
UniSeries compose(const UniSeries& outer, const UniSeries& inner);
/// Compositional inverse g with f(g(x)) = x + O(x^{N+1}).
UniSeries revert(const UniSeries& f);

}  // namespace mgn
