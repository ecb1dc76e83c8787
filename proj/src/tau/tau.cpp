#include "mgn/tau.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace mgn {

TauKey::TauKey(int genus, std::vector<int> descendants)
    : genus_(genus), descendants_(std::move(descendants)) {
  if (genus_ < 0) throw std::invalid_argument("TauKey: negative genus");
  for (int d : descendants_) {
    if (d < 0) throw std::invalid_argument("TauKey: negative descendant");
  }
  std::sort(descendants_.begin(), descendants_.end(), std::greater<>());
}

long TauKey::descendant_sum() const {
  return std::accumulate(descendants_.begin(), descendants_.end(), 0L);
}

bool TauKey::degree_matches() const {
  return descendant_sum() == 3L * genus_ - 3 + size();
}

std::size_t TauKeyHash::operator()(const TauKey& k) const noexcept {
  std::size_t h = std::hash<int>{}(k.genus());
  for (int d : k.descendants()) {
    h ^= std::hash<int>{}(d) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Rational TauTable::bracket(const TauKey& key) {
  if (!key.stable() || !key.degree_matches()) return Rational{};
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Rational value = compute(key);
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(key, std::move(value)).first->second;
}

std::size_t TauTable::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

Rational TauTable::compute(const TauKey& key) {
  const int g = key.genus();
  const std::vector<int>& d = key.descendants();
  const int n = key.size();

  if (g == 0 && d == std::vector<int>{0, 0, 0}) return 1;
  if (g == 1 && d == std::vector<int>{1}) return Rational(1, 24);

  // String equation: remove a tau_0 (descending order puts zeros last).
  if (d.back() == 0) {
    std::vector<int> rest(d.begin(), d.end() - 1);
    Rational sum;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (rest[j] == 0) continue;
      std::vector<int> lowered = rest;
      lowered[j] -= 1;
      sum += bracket(TauKey(g, std::move(lowered)));
    }
    return sum;
  }

  // Dilaton equation: remove a tau_1.
  if (d.back() == 1) {
    std::vector<int> rest(d.begin(), d.end() - 1);
    return Rational(2 * g - 2 + (n - 1)) * bracket(TauKey(g, std::move(rest)));
  }

  // All indices >= 2: Virasoro constraint in DVV form on the largest index.
  const int d1 = d.front();
  const std::vector<int> rest(d.begin() + 1, d.end());

  Rational merge;
  for (std::size_t j = 0; j < rest.size(); ++j) {
    std::vector<int> merged = rest;
    merged[j] = d1 + rest[j] - 1;
    const Rational w(double_factorial(2L * (d1 + rest[j]) - 1),
                     double_factorial(2L * rest[j] - 1));
    merge += w * bracket(TauKey(g, std::move(merged)));
  }

  Rational split;
  const std::size_t r = rest.size();
  for (int a = 0; a <= d1 - 2; ++a) {
    const int b = d1 - 2 - a;
    const Rational w(Integer(double_factorial(2L * a + 1) * double_factorial(2L * b + 1)));
    if (g >= 1) {
      std::vector<int> loop = rest;
      loop.push_back(a);
      loop.push_back(b);
      split += w * bracket(TauKey(g - 1, std::move(loop)));
    }
    for (int g1 = 0; g1 <= g; ++g1) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        std::vector<int> left{a};
        std::vector<int> right{b};
        for (std::size_t i = 0; i < r; ++i) {
          ((mask >> i) & 1U ? left : right).push_back(rest[i]);
        }
        const TauKey lk(g1, std::move(left));
        const TauKey rk(g - g1, std::move(right));
        if (!lk.stable() || !lk.degree_matches() || !rk.stable() ||
            !rk.degree_matches()) {
          continue;
        }
        split += w * bracket(lk) * bracket(rk);
      }
    }
  }

  return (merge + split / Rational(2)) / Rational(double_factorial(2L * d1 + 1));
}

TauTable& default_tau_table() {
  static TauTable table;
  return table;
}

Rational tau_bracket(const TauKey& key) {
  return default_tau_table().bracket(key);
}

Rational tau_bracket(int genus, std::vector<int> descendants) {
  return tau_bracket(TauKey(genus, std::move(descendants)));
}

Rational genus0_closed(std::span<const int> descendants) {
  const long n = static_cast<long>(descendants.size());
  long sum = 0;
  for (int d : descendants) {
    if (d < 0) return Rational{};
    sum += d;
  }
  if (n < 3 || sum != n - 3) return Rational{};
  Integer den = 1;
  for (int d : descendants) den *= factorial(static_cast<unsigned long>(d));
  return Rational(factorial(static_cast<unsigned long>(n - 3)), den);
}

std::vector<Rational> painleve_b(int g_max) {
  if (g_max < 0) return {};
  std::vector<Rational> b{Rational(-1)};
  if (g_max >= 1) b.emplace_back(Rational(1, 24));
  for (int g = 1; g + 1 <= g_max; ++g) {
    Rational next = Rational(25L * g * g - 1, 24) * b[g];
    Rational conv;
    for (int m = 1; m <= g; ++m) conv += b[g + 1 - m] * b[m];
    next += conv / Rational(2);
    b.push_back(std::move(next));
  }
  return b;
}

Rational tau2_power_from_painleve(int genus) {
  if (genus < 2) {
    throw std::invalid_argument(
        "tau2_power_from_painleve: defined for genus >= 2");
  }
  const Rational bg = painleve_b(genus).back();
  Integer two_g = 1;
  two_g <<= genus;
  const Rational scale(two_g * factorial(3UL * genus - 3),
                       Integer((5L * genus - 3) * (5L * genus - 5)));
  return bg * scale;
}

FreeEnergy free_energy_poly(int genus, int max_insertions, int max_index) {
  if (genus < 0 || max_insertions < 0 || max_index < 0) {
    throw std::invalid_argument("free_energy_poly: negative argument");
  }
  const std::vector<int> weights(static_cast<std::size_t>(max_index) + 1, 1);
  MultiPoly::Terms terms;

  // Enumerate multiplicity profiles l_{max_index}, ..., l_0.
  std::vector<int> l(static_cast<std::size_t>(max_index) + 1, 0);
  const long max_sum = 3L * genus - 3 + max_insertions;
  std::function<void(int, int, long)> visit = [&](int index, int count,
                                                  long sum) {
    if (sum > max_sum) return;
    if (index < 0) {
      if (count == 0 || sum != 3L * genus - 3 + count) return;
      std::vector<int> d;
      Integer sym = 1;
      Exponents e(l.size(), 0);
      for (std::size_t i = 0; i < l.size(); ++i) {
        d.insert(d.end(), static_cast<std::size_t>(l[i]), static_cast<int>(i));
        sym *= factorial(static_cast<unsigned long>(l[i]));
        e[i] = static_cast<unsigned>(l[i]);
      }
      const TauKey key(genus, std::move(d));
      if (!key.stable()) return;
      const Rational value = tau_bracket(key);
      if (!value.is_zero()) terms.emplace(std::move(e), value / Rational(sym));
      return;
    }
    for (int k = 0; count + k <= max_insertions; ++k) {
      l[index] = k;
      visit(index - 1, count + k, sum + static_cast<long>(k) * index);
    }
    l[index] = 0;
  };
  visit(max_index, 0, 0);

  return FreeEnergy{genus, max_insertions, max_index,
                    MultiPoly(weights, max_insertions, std::move(terms))};
}

}  // namespace mgn
