#include "mgn/diffpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace mgn {

namespace {

void trim_rest(std::vector<unsigned>& r) {
  while (!r.empty() && r.back() == 0) r.pop_back();
}

DiffMonomial multiply(const DiffMonomial& a, const DiffMonomial& b) {
  DiffMonomial m;
  m.u1 = a.u1 + b.u1;
  m.rest.assign(std::max(a.rest.size(), b.rest.size()), 0);
  for (std::size_t i = 0; i < a.rest.size(); ++i) m.rest[i] += a.rest[i];
  for (std::size_t i = 0; i < b.rest.size(); ++i) m.rest[i] += b.rest[i];
  return m;
}

void accumulate(DiffPoly::Terms& t, const DiffMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  Rational& slot = t[m];
  slot += c;
  if (slot.is_zero()) t.erase(m);
}

}  // namespace

int DiffMonomial::exponent(int k) const {
  if (k < 1) throw std::out_of_range("DiffMonomial: U index must be >= 1");
  if (k == 1) return u1;
  const auto i = static_cast<std::size_t>(k - 2);
  return i < rest.size() ? static_cast<int>(rest[i]) : 0;
}

DiffPoly::DiffPoly(Terms terms) {
  for (auto& [m, c] : terms) {
    DiffMonomial key = m;
    trim_rest(key.rest);
    accumulate(terms_, key, c);
  }
}

DiffPoly DiffPoly::constant(const Rational& c) {
  return DiffPoly(Terms{{DiffMonomial{}, c}});
}

DiffPoly DiffPoly::u(int k, int e) {
  if (k < 1) throw std::invalid_argument("DiffPoly::u: index must be >= 1");
  DiffMonomial m;
  if (k == 1) {
    m.u1 = e;
  } else {
    if (e < 0) {
      throw std::invalid_argument(
          "DiffPoly::u: only U_1 may have a negative exponent");
    }
    m.rest.assign(static_cast<std::size_t>(k - 1), 0);
    m.rest[k - 2] = static_cast<unsigned>(e);
    trim_rest(m.rest);
  }
  return DiffPoly(Terms{{m, Rational(1)}});
}

Rational DiffPoly::coefficient(const DiffMonomial& m) const {
  DiffMonomial key = m;
  trim_rest(key.rest);
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational{} : it->second;
}

DiffPoly DiffPoly::scaled(const Rational& c) const {
  DiffPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

DiffPoly operator+(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r = a;
  for (const auto& [m, c] : b.terms_) accumulate(r.terms_, m, c);
  return r;
}

DiffPoly operator-(const DiffPoly& a, const DiffPoly& b) {
  return a + b.scaled(-1);
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      accumulate(r.terms_, multiply(ma, mb), ca * cb);
    }
  }
  return r;
}

DiffPoly pow(const DiffPoly& p, unsigned e) {
  DiffPoly result = DiffPoly::constant(1);
  DiffPoly base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

DiffPoly derive(const DiffPoly& p) {
  DiffPoly::Terms out;
  for (const auto& [m, c] : p.terms()) {
    // d/dt U_1^a = a U_1^{a-1} U_2
    if (m.u1 != 0) {
      DiffMonomial d = m;
      d.u1 -= 1;
      if (d.rest.empty()) d.rest.push_back(0);
      d.rest[0] += 1;
      accumulate(out, d, c * Rational(m.u1));
    }
    // d/dt U_k^b = b U_k^{b-1} U_{k+1}, k >= 2
    for (std::size_t i = 0; i < m.rest.size(); ++i) {
      if (m.rest[i] == 0) continue;
      DiffMonomial d = m;
      d.rest[i] -= 1;
      if (d.rest.size() <= i + 1) d.rest.resize(i + 2, 0);
      d.rest[i + 1] += 1;
      trim_rest(d.rest);
      accumulate(out, d, c * Rational(m.rest[i]));
    }
  }
  return DiffPoly(std::move(out));
}

std::string DiffPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational a = c.abs();
    bool wrote = false;
    if (a != Rational(1) || (m.u1 == 0 && m.rest.empty())) {
      os << a;
      wrote = true;
    }
    if (m.u1 != 0) {
      if (wrote) os << "*";
      os << "U1";
      if (m.u1 != 1) os << "^" << m.u1;
      wrote = true;
    }
    for (std::size_t i = 0; i < m.rest.size(); ++i) {
      if (m.rest[i] == 0) continue;
      if (wrote) os << "*";
      os << "U" << i + 2;
      if (m.rest[i] > 1) os << "^" << m.rest[i];
      wrote = true;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace mgn
