#include "mgn/genexp.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "mgn/tau.hpp"

namespace mgn {

UniSeries bessel_x_of_y(int order) {
  if (order < 1) throw std::invalid_argument("bessel_x_of_y: order < 1");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int m = 0; m + 1 <= order; ++m) {
    const Rational term(Integer(1), Integer(factorial(m) * factorial(m + 1)));
    c[m + 1] = m % 2 == 0 ? term : -term;
  }
  return UniSeries(std::move(c), order);
}

namespace {

UniSeries compute_y_of_x(int order) {
  const auto len = static_cast<std::size_t>(order) + 1;
  std::vector<Rational> y(len), r(len), big_w(len), w(len), s(len);
  y[1] = 1;
  r[0] = 1;
  big_w[0] = 1;
  w[0] = 1;
  s[0] = 1;
  for (int k = 1; k + 1 <= order; ++k) {
    // r = x / y = 1 / (y / x);  coefficient k-1 needs y_2 .. y_k.
    if (k - 1 >= 1) {
      Rational acc;
      for (int i = 1; i <= k - 1; ++i) acc -= y[i + 1] * r[k - 1 - i];
      r[k - 1] = acc;
    }
    // (w^2)' = -2 r
    big_w[k] = Rational(-2) * r[k - 1] / Rational(k);
    // w = sqrt(w^2)
    Rational acc = big_w[k];
    for (int i = 1; i <= k - 1; ++i) acc -= w[i] * w[k - i];
    w[k] = acc / Rational(2);
    // y' = 1 / w
    Rational sk;
    for (int i = 1; i <= k; ++i) sk -= w[i] * s[k - i];
    s[k] = sk;
    y[k + 1] = s[k] / Rational(k + 1);
  }
  return UniSeries(std::move(y), order);
}

}  // namespace

UniSeries y_of_x(int order) {
  if (order < 1) throw std::invalid_argument("y_of_x: order < 1");
  static std::mutex mutex;
  static UniSeries cache(0);
  std::lock_guard lock(mutex);
  if (cache.order() < order) cache = compute_y_of_x(order);
  return cache.truncated(order);
}

UniSeries phi_series(int genus, int order) {
  if (genus < 0 || order < 0) {
    throw std::invalid_argument("phi_series: negative argument");
  }
  if (genus == 0) {
    const int m = std::max(order, 3);
    return antiderivative(antiderivative(y_of_x(m - 2))).truncated(order);
  }
  if (genus == 1) {
    const UniSeries y1 = derivative(y_of_x(order + 1));
    return log(y1).scaled(Rational(1, 24));
  }

  const int top = 3 * genus - 2;
  const UniSeries y = y_of_x(order + top);
  const UniSeries y1 = derivative(y);
  const UniSeries inv_y1 = UniSeries::constant(1, y1.order()) / y1;

  // f_2 = y'' / y'^3, f_{k+1} = f_k' / y'
  std::vector<UniSeries> f;
  f.push_back(UniSeries(0));  // f_0, unused
  f.push_back(UniSeries(0));  // f_1, unused
  f.push_back(derivative(y1) * pow(inv_y1, 3L));
  for (int k = 2; k < top; ++k) f.push_back(derivative(f[k]) * inv_y1);

  UniSeries phi(order);
  for (const MultiIndex& m : multi_indices_of_weight(3 * genus - 3)) {
    std::vector<int> d;
    for (int a = 1; a <= m.max_slot(); ++a) d.insert(d.end(), m[a], a + 1);
    const Rational tau = tau_bracket(genus, std::move(d));
    if (tau.is_zero()) continue;
    UniSeries term = pow(y1, 2L * genus - 2 + m.length());
    for (int a = 1; a <= m.max_slot(); ++a) {
      if (m[a] != 0) term = term * pow(f[a + 1], static_cast<long>(m[a]));
    }
    phi += term.scaled(tau / Rational(m.factorial()));
  }
  return phi.truncated(order);
}

VolumeTable volumes_fast(int genus, int n_max) {
  if (genus < 0 || n_max < 0) {
    throw std::invalid_argument("volumes_fast: negative argument");
  }
  const UniSeries phi = phi_series(genus, n_max);
  VolumeTable table;
  for (int n = 0; n <= n_max; ++n) {
    if (2 * genus - 2 + n <= 0) continue;
    const Integer scale = factorial(static_cast<unsigned long>(n)) *
                          factorial(static_cast<unsigned long>(n + 3 * genus - 3));
    table.insert(genus, n, phi[n] * Rational(scale), Provenance::GenusExpansion);
  }
  return table;
}

DiffPoly iz_tower(int k) {
  if (k < 1) throw std::invalid_argument("iz_tower: k < 1");
  DiffPoly i = DiffPoly::constant(1) - DiffPoly::u(1, -1);
  const DiffPoly inv_u1 = DiffPoly::u(1, -1);
  for (int j = 1; j < k; ++j) i = derive(i) * inv_u1;
  return i;
}

GenusExpansion iz_free_energy(int genus) {
  if (genus < 2) {
    throw std::invalid_argument(
        "iz_free_energy: genus must be >= 2; F_0 is the seed and "
        "F_1 = (1/24) log u_0'");
  }
  const int top = 3 * genus - 2;
  std::vector<DiffPoly> tower{DiffPoly{}};
  for (int k = 1; k <= top; ++k) tower.push_back(iz_tower(k));

  DiffPoly f;
  for (const MultiIndex& m : multi_indices_of_weight(3 * genus - 3)) {
    std::vector<int> d;
    for (int a = 1; a <= m.max_slot(); ++a) d.insert(d.end(), m[a], a + 1);
    const Rational tau = tau_bracket(genus, std::move(d));
    if (tau.is_zero()) continue;
    DiffPoly term = DiffPoly::u(1, static_cast<int>(2 * genus - 2 + m.length()));
    for (int a = 1; a <= m.max_slot(); ++a) {
      if (m[a] != 0) term = term * pow(tower[a + 1], m[a]);
    }
    f = f + term.scaled(tau / Rational(m.factorial()));
  }
  return GenusExpansion{genus, std::move(f)};
}

std::map<MultiIndex, Rational> a_coefficients(int genus, int n) {
  DiffPoly p;
  int derivatives = 0;
  if (genus == 0) {
    if (n < 3) throw std::invalid_argument("a_coefficients: genus 0 needs n >= 3");
    p = DiffPoly::u(1);  // F_0''' = u_0'
    derivatives = n - 3;
  } else if (genus == 1) {
    if (n < 1) {
      throw std::invalid_argument(
          "a_coefficients: genus 1 needs n >= 1 (F_1 is a logarithm)");
    }
    p = (DiffPoly::u(2) * DiffPoly::u(1, -1)).scaled(Rational(1, 24));
    derivatives = n - 1;
  } else if (genus >= 2) {
    if (n < 0) throw std::invalid_argument("a_coefficients: n < 0");
    p = iz_free_energy(genus).poly;
    derivatives = n;
  } else {
    throw std::invalid_argument("a_coefficients: negative genus");
  }
  for (int i = 0; i < derivatives; ++i) p = derive(p);

  std::map<MultiIndex, Rational> out;
  for (const auto& [mono, c] : p.terms()) {
    const MultiIndex m(mono.rest);
    if (mono.u1 != 1 - genus - m.length() || m.weight() != 3L * genus - 3 + n) {
      throw std::logic_error("a_coefficients: monomial " + m.str() +
                             " breaks the U_1 grading");
    }
    out.emplace(m, c);
  }
  return out;
}

namespace {

// [alpha^i] log(1 + sum_j alpha^j t_j), i = 1..d, in the graded ring.
std::vector<MultiPoly> log_q_coefficients(int d, int truncation) {
  const std::vector<int> w = graded_ring_weights(truncation);
  auto t = [&](int j) {
    return j <= truncation ? MultiPoly::variable(w, truncation, static_cast<std::size_t>(j))
                           : MultiPoly(w, truncation);
  };
  std::vector<MultiPoly> c{MultiPoly(w, truncation)};
  for (int i = 1; i <= d; ++i) {
    // i c_i = i t_i - sum_{k=1}^{i-1} k c_k t_{i-k}
    MultiPoly acc = t(i).scaled(i);
    for (int k = 1; k < i; ++k) acc = acc - (c[k] * t(i - k)).scaled(k);
    c.push_back(acc.scaled(Rational(1, i)));
  }
  return c;
}

MultiPoly bu_polynomial(int genus, int n, int truncation) {
  const int d = 3 * genus - 3 + n;
  const std::vector<int> w = graded_ring_weights(truncation);
  const std::vector<MultiPoly> c = log_q_coefficients(d, truncation);
  MultiPoly b(w, truncation);
  for (const MultiIndex& m : multi_indices_of_weight(d)) {
    const Rational k = kappa_bracket(genus, n, m);
    if (k.is_zero()) continue;
    MultiPoly term = MultiPoly::constant(w, truncation, k / Rational(m.factorial()));
    for (int a = 1; a <= m.max_slot(); ++a) {
      if (m[a] != 0) term = term * pow(c[a], m[a]);
    }
    b = b + term;
  }
  return b;
}

void require_stable(int genus, int n, const char* who) {
  if (genus < 0 || n < 0 || 2 * genus - 2 + n <= 0) {
    throw std::invalid_argument(std::string(who) + ": (g, n) = (" +
                                std::to_string(genus) + ", " +
                                std::to_string(n) + ") is unstable");
  }
}

// Solves A a = b exactly; throws SingularSystem when A is singular.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a,
                                  std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) {
      throw SingularSystem("singular system at column " + std::to_string(col));
    }
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = a[col][col].inverse();
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational factor = a[row][col] * inv;
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace

BuClass bu_class(int genus, int n) {
  require_stable(genus, n, "bu_class");
  const int d = 3 * genus - 3 + n;
  return BuClass{genus, n, bu_polynomial(genus, n, d)};
}

IdentityReport verify_theorem51b(int genus, int max_weight) {
  if (genus < 0 || max_weight < 0) {
    throw std::invalid_argument("verify_theorem51b: negative argument");
  }
  const int t = graded_truncation(genus, max_weight);
  const std::vector<int> w = graded_ring_weights(t);

  MultiPoly b(w, t);
  for (int d = std::max(0, 3 * genus - 3); d <= max_weight; ++d) {
    const int n = d - 3 * genus + 3;
    if (2 * genus - 2 + n <= 0) continue;
    Exponents xn{static_cast<unsigned>(n)};
    const MultiPoly xpow(w, t, MultiPoly::Terms{
        {xn, Rational(Integer(1), factorial(static_cast<unsigned long>(n)))}});
    b = b + xpow * bu_polynomial(genus, n, t);
  }

  std::vector<MultiPoly> images{MultiPoly::variable(w, t, 0)};
  if (t >= 1) {
    const std::vector<MultiPoly> q = schur_polynomials(SchurKind::Q, t, t);
    images.insert(images.end(), q.begin(), q.end());
  }
  const MultiPoly substituted = b.substitute(images);
  return compare_polys(k_series(genus, max_weight), substituted,
                       graded_ring_names(t, "s"));
}

DecompositionReport verify_theorem51a(int genus, int n) {
  require_stable(genus, n, "verify_theorem51a");
  const int d = 3 * genus - 3 + n;
  const std::vector<int> w = graded_ring_weights(d);

  DecompositionReport report;
  report.basis_reading =
      "[M_{0,i+3}]^{m_i}: the degree-i generator is the class of M_{0,i+3}";

  std::vector<MultiPoly> generators{MultiPoly::constant(w, d, 1)};
  for (int i = 1; i <= d; ++i) generators.push_back(bu_polynomial(0, i + 3, d));

  const std::vector<MultiIndex> unknowns = multi_indices_of_weight(d);
  std::vector<MultiPoly> products;
  for (const MultiIndex& m : unknowns) {
    MultiPoly p = MultiPoly::constant(w, d, 1);
    for (int a = 1; a <= m.max_slot(); ++a) {
      if (m[a] != 0) p = p * pow(generators[a], m[a]);
    }
    products.push_back(std::move(p));
  }

  // Row r is the coefficient of t^{mu_r}, where mu_r runs over the same
  // partitions of d (exponent of t_a = mu_a, x exponent 0).
  auto t_monomial = [](const MultiIndex& mu) {
    Exponents e{0};
    e.insert(e.end(), mu.exponents().begin(), mu.exponents().end());
    trim(e);
    return e;
  };
  const std::size_t size = unknowns.size();
  std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size));
  std::vector<Rational> rhs(size);
  const MultiPoly target = bu_polynomial(genus, n, d);
  for (std::size_t r = 0; r < size; ++r) {
    const Exponents e = t_monomial(unknowns[r]);
    for (std::size_t c = 0; c < size; ++c) a[r][c] = products[c].coefficient(e);
    rhs[r] = target.coefficient(e);
  }
  const std::vector<Rational> solution = solve_exact(std::move(a), std::move(rhs));
  for (std::size_t i = 0; i < size; ++i) {
    if (!solution[i].is_zero()) report.decomposition.emplace(unknowns[i], solution[i]);
  }

  for (const auto& [m, c] : a_coefficients(genus, n)) {
    if (!c.is_zero()) report.expected.emplace(m, c);
  }
  report.pass = report.decomposition == report.expected;
  return report;
}

Theorem51Report verify_theorem51(int genus, int n, int max_weight) {
  return Theorem51Report{verify_theorem51b(genus, max_weight),
                         verify_theorem51a(genus, n)};
}

}  // namespace mgn
