#include "mgn/series.hpp"

#include <algorithm>
#include <sstream>

namespace mgn {

namespace {

void require_order(int order) {
  if (order < 0) throw std::invalid_argument("UniSeries: negative order");
}

}  // namespace

UniSeries::UniSeries(int order) {
  require_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational{});
}

UniSeries::UniSeries(std::vector<Rational> coefficients, int order)
    : coeffs_(std::move(coefficients)) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

UniSeries UniSeries::constant(const Rational& c, int order) {
  UniSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

UniSeries UniSeries::identity(int order) {
  UniSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

UniSeries UniSeries::truncated(int order) const {
  return UniSeries(coeffs_, std::min(order, this->order()));
}

UniSeries& UniSeries::operator+=(const UniSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

UniSeries& UniSeries::operator-=(const UniSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

UniSeries operator*(const UniSeries& a, const UniSeries& b) {
  const int n = std::min(a.order(), b.order());
  UniSeries r(n);
  // Skip zero coefficients of `a`; many series here are sparse at low order.
  for (int i = 0; i <= n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

UniSeries operator/(const UniSeries& a, const UniSeries& b) {
  if (b.coeffs_[0].is_zero()) {
    throw SeriesError(SeriesError::Kind::ZeroDivisor, "divisor",
                      "series division: divisor has zero constant term");
  }
  const int n = std::min(a.order(), b.order());
  UniSeries q(n);
  const Rational inv0 = b.coeffs_[0].inverse();
  for (int k = 0; k <= n; ++k) {
    Rational acc = a.coeffs_[k];
    for (int j = 1; j <= k; ++j) {
      if (!b.coeffs_[j].is_zero()) acc -= b.coeffs_[j] * q.coeffs_[k - j];
    }
    q.coeffs_[k] = acc * inv0;
  }
  return q;
}

UniSeries UniSeries::operator-() const { return scaled(-1); }

UniSeries UniSeries::scaled(const Rational& c) const {
  UniSeries r = *this;
  for (auto& v : r.coeffs_) v *= c;
  return r;
}

std::string UniSeries::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational a = c.abs();
    if (k == 0) {
      os << a;
      continue;
    }
    if (a != Rational(1)) os << a << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << order() + 1 << ")";
  return os.str();
}

UniSeries exp(const UniSeries& f) {
  if (!f[0].is_zero()) {
    throw SeriesError(SeriesError::Kind::ExpConstantTerm, "argument",
                      "series exp: argument has nonzero constant term");
  }
  const int n = f.order();
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  // n e_n = sum_{k=1}^n k f_k e_{n-k}
  for (int m = 1; m <= n; ++m) {
    Rational acc;
    for (int k = 1; k <= m; ++k) {
      if (!f[k].is_zero()) acc += Rational(k) * f[k] * e[m - k];
    }
    e[m] = acc / Rational(m);
  }
  return UniSeries(std::move(e), n);
}

UniSeries log(const UniSeries& f) {
  if (f[0] != Rational(1)) {
    throw SeriesError(SeriesError::Kind::LogConstantTerm, "argument",
                      "series log: constant term of argument is not 1");
  }
  const int n = f.order();
  std::vector<Rational> l(n + 1);
  // n l_n = n f_n - sum_{k=1}^{n-1} k l_k f_{n-k}
  for (int m = 1; m <= n; ++m) {
    Rational acc = Rational(m) * f[m];
    for (int k = 1; k < m; ++k) {
      if (!f[m - k].is_zero()) acc -= Rational(k) * l[k] * f[m - k];
    }
    l[m] = acc / Rational(m);
  }
  return UniSeries(std::move(l), n);
}

UniSeries pow(const UniSeries& f, long e) {
  if (e < 0) {
    if (f[0].is_zero()) {
      throw SeriesError(SeriesError::Kind::ZeroDivisor, "base",
                        "series pow: negative power of a series with zero "
                        "constant term");
    }
    return UniSeries::constant(1, f.order()) / pow(f, -e);
  }
  UniSeries result = UniSeries::constant(1, f.order());
  UniSeries base = f;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

UniSeries pow(const UniSeries& f, const Rational& alpha) {
  if (f[0] != Rational(1)) {
    throw SeriesError(SeriesError::Kind::PowConstantTerm, "base",
                      "series pow: rational power needs constant term 1");
  }
  const int n = f.order();
  std::vector<Rational> p(n + 1);
  p[0] = 1;
  // m p_m = sum_{k=1}^m ((alpha + 1) k - m) f_k p_{m-k}
  for (int m = 1; m <= n; ++m) {
    Rational acc;
    for (int k = 1; k <= m; ++k) {
      if (f[k].is_zero()) continue;
      acc += ((alpha + 1) * Rational(k) - Rational(m)) * f[k] * p[m - k];
    }
    p[m] = acc / Rational(m);
  }
  return UniSeries(std::move(p), n);
}

UniSeries derivative(const UniSeries& f) {
  if (f.order() == 0) {
    throw SeriesError(SeriesError::Kind::OrderUnderflow, "argument",
                      "series derivative: order-0 series has no known "
                      "derivative coefficients");
  }
  std::vector<Rational> d(f.order());
  for (int k = 1; k <= f.order(); ++k) d[k - 1] = Rational(k) * f[k];
  return UniSeries(std::move(d), f.order() - 1);
}

UniSeries antiderivative(const UniSeries& f) {
  std::vector<Rational> a(f.order() + 2);
  for (int k = 0; k <= f.order(); ++k) a[k + 1] = f[k] / Rational(k + 1);
  return UniSeries(std::move(a), f.order() + 1);
}

UniSeries compose(const UniSeries& outer, const UniSeries& inner) {
  if (!inner[0].is_zero()) {
    throw SeriesError(SeriesError::Kind::ComposeConstantTerm, "inner",
                      "series compose: inner series has nonzero constant term");
  }
  const int n = std::min(outer.order(), inner.order());
  const UniSeries g = inner.truncated(n);
  UniSeries acc = UniSeries::constant(outer[n], n);
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * g;
    acc += UniSeries::constant(outer[k], n);
  }
  return acc;
}

UniSeries revert(const UniSeries& f) {
  if (f.order() < 1 || !f[0].is_zero() || f[1].is_zero()) {
    throw SeriesError(SeriesError::Kind::NotInvertible, "argument",
                      "series revert: not invertible (need f(0) = 0 and "
                      "f'(0) != 0)");
  }
  const int n = f.order();
  // Lagrange inversion: [x^k] g = (1/k) [y^{k-1}] h(y)^k with h = y / f(y).
  std::vector<Rational> shifted(n);
  for (int k = 1; k <= n; ++k) shifted[k - 1] = f[k];
  const UniSeries h =
      UniSeries::constant(1, n - 1) / UniSeries(std::move(shifted), n - 1);
  std::vector<Rational> g(n + 1);
  UniSeries hk = UniSeries::constant(1, n - 1);
  for (int k = 1; k <= n; ++k) {
    hk = hk * h;
    g[k] = hk[k - 1] / Rational(k);
  }
  return UniSeries(std::move(g), n);
}

}  // namespace mgn
