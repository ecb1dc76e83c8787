#include <doctest.h>

#include <functional>
#include <random>
#include <thread>

#include "mgn/tau.hpp"

using namespace mgn;

namespace {

std::vector<int> random_composition(std::mt19937& rng, int parts, int total) {
  std::vector<int> d(parts, 0);
  std::uniform_int_distribution<int> pick(0, parts - 1);
  for (int i = 0; i < total; ++i) ++d[pick(rng)];
  return d;
}

// Every multiset of `n` indices with sum `total`, non-increasing.
void for_each_multiset(int n, int total, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> d;
  std::function<void(int, int, int)> rec = [&](int left, int sum_left, int cap) {
    if (left == 0) {
      if (sum_left == 0) fn(d);
      return;
    }
    for (int v = std::min(cap, sum_left); v >= 0; --v) {
      d.push_back(v);
      rec(left - 1, sum_left - v, v);
      d.pop_back();
    }
  };
  rec(n, total, total);
}

}  // namespace

TEST_CASE("tau key canonical form") {
  const TauKey a(1, {0, 2}), b(1, {2, 0});
  CHECK(a == b);
  CHECK(TauKeyHash{}(a) == TauKeyHash{}(b));
  CHECK(a.descendants() == std::vector<int>{2, 0});
  CHECK_THROWS_AS(TauKey(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(TauKey(0, {0, -1, 0}), std::invalid_argument);
  CHECK_FALSE(TauKey(0, {0, 0}).stable());
  CHECK_FALSE(TauKey(1, {}).stable());
}

TEST_CASE("tau brackets: documented values") {
  CHECK(tau_bracket(0, {0, 0, 0}) == 1);
  CHECK(tau_bracket(0, {0, 0, 0, 0, 2}) == 1);
  CHECK(tau_bracket(1, {1}) == Rational(1, 24));
  CHECK(tau_bracket(2, {2, 2, 2}) == Rational(7, 240));
  CHECK(tau_bracket(1, {0, 2}) == Rational(1, 24));
  CHECK(tau_bracket(2, {4}) == Rational(1, 1152));
  CHECK(tau_bracket(2, {2, 3}) == Rational(29, 5760));
  CHECK(tau_bracket(1, {0, 0, 3}) == Rational(1, 24));
  CHECK(tau_bracket(1, {0, 0, 2, 2}) == Rational(1, 6));
}

TEST_CASE("tau brackets vanish off the dimension constraint") {
  CHECK(tau_bracket(0, {0, 0}) == 0);
  CHECK(tau_bracket(0, {1, 0, 0}) == 0);
  CHECK(tau_bracket(2, {1}) == 0);
  CHECK(tau_bracket(1, {}) == 0);
}

TEST_CASE("one-point and genus-one closed forms") {
  // <tau_{3g-2}>_g = 1 / (24^g g!)
  for (int g = 1; g <= 5; ++g) {
    const Rational expected(Integer(1), Integer(pow(Rational(24), g).num() * factorial(g)));
    CHECK(tau_bracket(g, {3 * g - 2}) == expected);
  }
  // <tau_1^n>_1 = (n-1)!/24
  for (int n = 1; n <= 8; ++n) {
    CHECK(tau_bracket(1, std::vector<int>(n, 1)) ==
          Rational(factorial(n - 1)) / Rational(24));
  }
}

TEST_CASE("genus-0 closed form") {
  CHECK(genus0_closed(std::vector<int>{0, 0, 0}) == 1);
  CHECK(genus0_closed(std::vector<int>{0, 0, 0, 1}) == 1);
  CHECK(genus0_closed(std::vector<int>{0, 0, 0, 0, 1, 1}) == 0);
  CHECK(genus0_closed(std::vector<int>{0, 0, 0, 0, 0, 2, 2}) == 6);
  CHECK(tau_bracket(0, {0, 0, 0, 0, 0, 1, 3}) == 4);
  CHECK(tau_bracket(0, {0, 0, 0, 0, 1, 1}) == 0);

  int checked = 0;
  for (int n = 3; n <= 12; ++n) {
    for_each_multiset(n, n - 3, [&](const std::vector<int>& d) {
      CHECK(tau_bracket(0, d) == genus0_closed(d));
      ++checked;
    });
  }
  CHECK(checked == 97);
}

TEST_CASE("string and dilaton equations on random keys") {
  std::mt19937 rng(314159);
  std::uniform_int_distribution<int> genus(0, 3), extra(0, 4);
  int checked = 0;
  while (checked < 400) {
    const int g = genus(rng);
    const int n = extra(rng) + (g == 0 ? 3 : 1);

    // String: <tau_0 tau_d>_g with |d| = n, sum d = 3g - 2 + n.
    std::vector<int> d = random_composition(rng, n, 3 * g - 2 + n);
    std::vector<int> with0 = d;
    with0.push_back(0);
    Rational sum;
    for (int j = 0; j < n; ++j) {
      if (d[j] == 0) continue;
      std::vector<int> lowered = d;
      --lowered[j];
      sum += tau_bracket(g, lowered);
    }
    CHECK(tau_bracket(g, with0) == sum);

    // Dilaton: <tau_1 tau_e>_g = (2g - 2 + n) <tau_e>_g, sum e = 3g - 3 + n.
    if (2 * g - 2 + n > 0) {
      std::vector<int> e = random_composition(rng, n, 3 * g - 3 + n);
      std::vector<int> with1 = e;
      with1.push_back(1);
      CHECK(tau_bracket(g, with1) == Rational(2 * g - 2 + n) * tau_bracket(g, e));
      ++checked;
    }
    ++checked;
  }
}

TEST_CASE("Painleve recursion") {
  const std::vector<Rational> b = painleve_b(3);
  CHECK(b[0] == -1);
  CHECK(b[1] == Rational(1, 24));
  CHECK(b[2] == Rational(49, 1152));
  CHECK(tau2_power_from_painleve(2) == Rational(7, 240));
  for (int g = 2; g <= 4; ++g) {
    CHECK(tau_bracket(g, std::vector<int>(3 * g - 3, 2)) == tau2_power_from_painleve(g));
  }
  CHECK_THROWS_AS(tau2_power_from_painleve(1), std::invalid_argument);
  CHECK(painleve_b(-1).empty());
}

TEST_CASE("free energy polynomial") {
  const FreeEnergy f0 = free_energy_poly(0, 5, 3);
  CHECK(f0.poly.coefficient({3}) == Rational(1, 6));
  CHECK(f0.poly.coefficient({3, 1}) == Rational(1, 6));
  CHECK(f0.poly.coefficient({4, 0, 1}) == Rational(1, 24));
  CHECK(f0.poly.truncation() == 5);

  const FreeEnergy f1 = free_energy_poly(1, 3, 3);
  CHECK(f1.poly.coefficient({0, 1}) == Rational(1, 24));
  CHECK(f1.poly.coefficient({0, 2}) == Rational(1, 48));
  CHECK(f1.poly.coefficient({1, 0, 1}) == Rational(1, 24));
  CHECK_THROWS_AS(free_energy_poly(0, -1, 2), std::invalid_argument);
}

TEST_CASE("shared table under concurrent use") {
  TauTable serial;
  std::vector<TauKey> keys;
  for (int g = 0; g <= 3; ++g) {
    for (int n = 1; n <= 4; ++n) {
      for_each_multiset(n, 3 * g - 3 + n, [&](const std::vector<int>& d) { keys.emplace_back(g, d); });
    }
  }
  std::vector<Rational> expected;
  for (const TauKey& k : keys) expected.push_back(serial.bracket(k));

  TauTable shared;
  std::vector<std::vector<Rational>> got(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (const TauKey& k : keys) got[t].push_back(shared.bracket(k));
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& row : got) CHECK(row == expected);
  CHECK(shared.size() == serial.size());
}
