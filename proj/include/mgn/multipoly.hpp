#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgn/rational.hpp"

namespace mgn {

/// Exponent vector with implicit trailing zeros; canonical form has none.
using Exponents = std::vector<unsigned>;

void trim(Exponents& e);

/// Polynomial in finitely many graded variables, truncated at a weighted
/// total degree.
///
/// Variable i has positive weight weights[i]; a monomial with exponents e has
/// weighted degree sum_i weights[i] * e[i]. Terms above `truncation` are never
/// stored, and neither are zero coefficients. Two polynomials can be combined
/// only when their weight vectors agree; the result keeps the smaller
/// truncation.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  MultiPoly(std::vector<int> weights, int truncation);
  /// Terms beyond the truncation are discarded; zero coefficients are dropped.
  MultiPoly(std::vector<int> weights, int truncation, Terms terms);

  static MultiPoly constant(std::vector<int> weights, int truncation,
                            const Rational& c);
  static MultiPoly variable(std::vector<int> weights, int truncation,
                            std::size_t index);

  const std::vector<int>& weights() const { return weights_; }
  int truncation() const { return truncation_; }
  std::size_t num_variables() const { return weights_.size(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int weighted_degree(const Exponents& e) const;
  Rational coefficient(Exponents e) const;

  /// Same terms in a ring with a different truncation (terms above it drop).
  MultiPoly truncated(int truncation) const;

  MultiPoly scaled(const Rational& c) const;
  MultiPoly operator-() const { return scaled(-1); }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Ring homomorphism sending variable i to images[i]. All images must live
  /// in one common ring, which is the ring of the result. Variables that
  /// occur in this polynomial must have an image; a variable whose image has
  /// a nonzero term of weighted degree below the variable's own weight is
  /// rejected, since the result would then depend on terms this polynomial
  /// has already truncated.
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  /// Human-readable form using the given variable names.
  std::string str(std::span<const std::string> names) const;

 private:
  std::vector<int> weights_;
  int truncation_;
  Terms terms_;
};

/// Thrown when two polynomials with different gradings are combined.
class WeightMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

MultiPoly pow(const MultiPoly& p, unsigned e);

}  // namespace mgn
