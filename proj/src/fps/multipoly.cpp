#include "mgn/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace mgn {

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

namespace {

void check_weights(const std::vector<int>& weights) {
  for (int w : weights) {
    if (w <= 0) throw std::invalid_argument("MultiPoly: weights must be > 0");
  }
}

void require_same_ring(const MultiPoly& a, const MultiPoly& b,
                       const char* op) {
  if (a.weights() != b.weights()) {
    throw WeightMismatch(std::string("MultiPoly ") + op +
                         ": operands have different weight assignments");
  }
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

}  // namespace

MultiPoly::MultiPoly(std::vector<int> weights, int truncation)
    : weights_(std::move(weights)), truncation_(truncation) {
  check_weights(weights_);
  if (truncation_ < 0) {
    throw std::invalid_argument("MultiPoly: negative truncation");
  }
}

MultiPoly::MultiPoly(std::vector<int> weights, int truncation, Terms terms)
    : MultiPoly(std::move(weights), truncation) {
  for (auto& [e, c] : terms) {
    if (c.is_zero()) continue;
    Exponents key = e;
    trim(key);
    if (key.size() > weights_.size()) {
      throw std::invalid_argument("MultiPoly: exponent vector longer than "
                                  "the number of variables");
    }
    if (weighted_degree(key) > truncation_) continue;
    Rational& slot = terms_[key];
    slot += c;
    if (slot.is_zero()) terms_.erase(key);
  }
}

MultiPoly MultiPoly::constant(std::vector<int> weights, int truncation,
                              const Rational& c) {
  return MultiPoly(std::move(weights), truncation, Terms{{Exponents{}, c}});
}

MultiPoly MultiPoly::variable(std::vector<int> weights, int truncation,
                              std::size_t index) {
  if (index >= weights.size()) {
    throw std::out_of_range("MultiPoly::variable: index out of range");
  }
  Exponents e(index + 1, 0);
  e[index] = 1;
  return MultiPoly(std::move(weights), truncation, Terms{{e, Rational(1)}});
}

int MultiPoly::weighted_degree(const Exponents& e) const {
  long d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (i >= weights_.size()) return std::numeric_limits<int>::max();
    d += static_cast<long>(weights_[i]) * e[i];
  }
  return d > std::numeric_limits<int>::max() ? std::numeric_limits<int>::max()
                                             : static_cast<int>(d);
}

Rational MultiPoly::coefficient(Exponents e) const {
  trim(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational{} : it->second;
}

MultiPoly MultiPoly::truncated(int truncation) const {
  return MultiPoly(weights_, std::min(truncation, truncation_), terms_);
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  MultiPoly r(weights_, truncation_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b, "add");
  MultiPoly r = a.truncated(std::min(a.truncation_, b.truncation_));
  for (const auto& [e, c] : b.terms_) {
    if (r.weighted_degree(e) > r.truncation_) continue;
    Rational& slot = r.terms_[e];
    slot += c;
    if (slot.is_zero()) r.terms_.erase(e);
  }
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  return a + b.scaled(-1);
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_ring(a, b, "mul");
  MultiPoly r(a.weights_, std::min(a.truncation_, b.truncation_));
  for (const auto& [ea, ca] : a.terms_) {
    const int da = a.weighted_degree(ea);
    if (da > r.truncation_) continue;
    for (const auto& [eb, cb] : b.terms_) {
      if (da + b.weighted_degree(eb) > r.truncation_) continue;
      Exponents e = add_exponents(ea, eb);
      Rational& slot = r.terms_[e];
      slot += ca * cb;
      if (slot.is_zero()) r.terms_.erase(e);
    }
  }
  return r;
}

MultiPoly pow(const MultiPoly& p, unsigned e) {
  MultiPoly result = MultiPoly::constant(p.weights(), p.truncation(), 1);
  MultiPoly base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.empty()) {
    throw std::invalid_argument("MultiPoly::substitute: no images given");
  }
  const MultiPoly& ring = images.front();
  for (const MultiPoly& img : images) require_same_ring(ring, img, "substitute");
  const int target_truncation = std::min(
      truncation_,
      std::min_element(images.begin(), images.end(),
                       [](const MultiPoly& x, const MultiPoly& y) {
                         return x.truncation() < y.truncation();
                       })->truncation());

  std::vector<bool> used(weights_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) used[i] = true;
    }
  }
  for (std::size_t i = 0; i < used.size(); ++i) {
    if (!used[i]) continue;
    if (i >= images.size()) {
      throw std::invalid_argument("MultiPoly::substitute: variable " +
                                  std::to_string(i) + " has no image");
    }
    for (const auto& [e, c] : images[i].terms()) {
      if (images[i].weighted_degree(e) < weights_[i]) {
        throw std::invalid_argument(
            "MultiPoly::substitute: image of variable " + std::to_string(i) +
            " has a term below the variable's weight");
      }
    }
  }

  // Cache image powers per variable.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto image_power = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) {
      cache.push_back(MultiPoly::constant(ring.weights(), target_truncation, 1));
    }
    while (cache.size() <= k) {
      cache.push_back(cache.back() * images[i].truncated(target_truncation));
    }
    return cache[k];
  };

  Terms acc;
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(ring.weights(), target_truncation, c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
      if (e[i] != 0) term = term * image_power(i, e[i]);
    }
    for (const auto& [te, tc] : term.terms_) acc[te] += tc;
  }
  return MultiPoly(ring.weights(), target_truncation, std::move(acc));
}

std::string MultiPoly::str(std::span<const std::string> names) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational a = c.abs();
    bool wrote = false;
    if (a != Rational(1) || e.empty()) {
      os << a;
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace mgn
