#pragma once

#include <map>
#include <string>
#include <vector>

#include "mgn/rational.hpp"

namespace mgn {

/// Monomial U_1^{u1} * U_2^{rest[0]} * U_3^{rest[1]} * ... ; only U_1 may
/// carry a negative exponent. `rest` has no trailing zeros.
struct DiffMonomial {
  int u1 = 0;
  std::vector<unsigned> rest;

  friend auto operator<=>(const DiffMonomial&, const DiffMonomial&) = default;
  friend bool operator==(const DiffMonomial&, const DiffMonomial&) = default;

  /// Exponent of U_k, k >= 1.
  int exponent(int k) const;
};

/// Polynomial in U_1^{+-1}, U_2, U_3, ... with the derivation D U_k = U_{k+1}.
///
/// U_k stands for the k-th derivative of a fixed series u (in the genus
/// expansion, u = u_0' so that U_1 = F_0''' and U_k = d^{k+2} F_0).
class DiffPoly {
 public:
  using Terms = std::map<DiffMonomial, Rational>;

  DiffPoly() = default;
  explicit DiffPoly(Terms terms);

  static DiffPoly constant(const Rational& c);
  /// U_k^e; negative e is allowed only for k == 1.
  static DiffPoly u(int k, int e = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const DiffMonomial& m) const;

  DiffPoly scaled(const Rational& c) const;
  DiffPoly operator-() const { return scaled(-1); }
  friend DiffPoly operator+(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator-(const DiffPoly& a, const DiffPoly& b);
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

  std::string str() const;

 private:
  Terms terms_;
};

DiffPoly pow(const DiffPoly& p, unsigned e);

/// The derivation D: linear, Leibniz, D(U_k) = U_{k+1}.
DiffPoly derive(const DiffPoly& p);

}  // namespace mgn
