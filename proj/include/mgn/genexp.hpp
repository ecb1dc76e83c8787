#pragma once

#include <map>
#include <string>

#include "mgn/diffpoly.hpp"
#include "mgn/kappa.hpp"
#include "mgn/multipoly.hpp"
#include "mgn/series.hpp"

namespace mgn {

/// x(y) = sqrt(y) J_1(2 sqrt(y)) = sum_{m>=0} (-1)^m y^{m+1} / (m! (m+1)!).
UniSeries bessel_x_of_y(int order);

/// y(x), the compositional inverse of bessel_x_of_y; equal to phi_0''(x).
///
/// Computed by an O(N^2) recurrence from the first-order system
/// y' = 1/w, (w^2)' = -2x/y with w = J_0(2 sqrt(y)). Results are cached.
UniSeries y_of_x(int order);

/// phi_g(x) = sum_n V_{g,n} x^n / (n! (n+3g-3)!), to the given order.
UniSeries phi_series(int genus, int order);

/// V_{g,n} for n <= n_max from the coefficients of phi_g.
VolumeTable volumes_fast(int genus, int n_max);

/// F_g (g >= 2) written in U_1 = u_0' and U_k = d^{k+2} F_0 by expanding the
/// I_k of the genus expansion.
struct GenusExpansion {
  int genus;
  DiffPoly poly;
};

GenusExpansion iz_free_energy(int genus);

/// I_1 = 1 - U_1^{-1}, I_{k+1} = D(I_k) / U_1.
DiffPoly iz_tower(int k);

/// a_m^{g,n}: d^n F_g / dt_0^n = sum_m a_m U_1^{1-g-||m||} prod_i U_{i+1}^{m_i}.
/// Genus 0 needs n >= 3 and genus 1 needs n >= 1.
std::map<MultiIndex, Rational> a_coefficients(int genus, int n);

/// b_m^{g,n}: the class of M_{g,n} in H_*(BU) as a polynomial in t_1, t_2,
/// ... (t_i of weight i), using ch_i = kappa_i / i!.
struct BuClass {
  int genus;
  int n;
  MultiPoly poly;  // graded ring with truncation 3g - 3 + n; x unused
};

BuClass bu_class(int genus, int n);

/// Part (b): K_g == B_g(x, q_1, q_2, ...) for kappa-degree <= max_weight.
IdentityReport verify_theorem51b(int genus, int max_weight);

/// Part (a): decomposition of [M_{g,n}] in the multiplicative basis generated
/// by [M_{0,i+3}] (degree i), compared with a_coefficients(g, n).
struct DecompositionReport {
  bool pass = false;
  std::string basis_reading;
  std::map<MultiIndex, Rational> decomposition;
  std::map<MultiIndex, Rational> expected;
};

DecompositionReport verify_theorem51a(int genus, int n);

struct Theorem51Report {
  IdentityReport part_b;
  DecompositionReport part_a;
  bool pass() const { return part_b.pass && part_a.pass; }
};

Theorem51Report verify_theorem51(int genus, int n, int max_weight);

/// Thrown by the exact linear solve when the basis products are dependent.
class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mgn
