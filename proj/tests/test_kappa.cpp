#include <doctest.h>

#include <functional>

#include "mgn/kappa.hpp"

using namespace mgn;

namespace {

// The kappa-to-tau transform summed over ordered decompositions (compositions) of m = (N).
Rational kappa1_power_by_compositions(int genus, int n, int big_n) {
  Rational total;
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      const int k = static_cast<int>(parts.size());
      std::vector<int> d(n, 0);
      Integer denom = factorial(k);
      for (int p : parts) {
        d.push_back(p + 1);
        denom *= factorial(p);
      }
      const Rational sign = (big_n - k) % 2 == 0 ? 1 : -1;
      total += sign * tau_bracket(genus, d) / Rational(denom);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      parts.push_back(p);
      rec(left - p);
      parts.pop_back();
    }
  };
  rec(big_n);
  return total * Rational(factorial(big_n));
}

std::vector<std::vector<MultiIndex>> parts_of(const MultiIndex& m) {
  std::vector<std::vector<MultiIndex>> out;
  for (const VectorPartition& p : vector_partitions(m)) out.push_back(p.parts);
  return out;
}

}  // namespace

TEST_CASE("multi-index basics") {
  const MultiIndex m({2, 0, 1});
  CHECK(m[1] == 2);
  CHECK(m[2] == 0);
  CHECK(m[7] == 0);
  CHECK(m.weight() == 5);
  CHECK(m.length() == 3);
  CHECK(m.factorial() == 2);
  CHECK(MultiIndex({1, 0, 0}) == MultiIndex::kappa1_power(1));
  CHECK(MultiIndex::unit(2) + MultiIndex::unit(1) == MultiIndex({1, 1}));
  CHECK(multi_indices_of_weight(4).size() == 5);
  CHECK(multi_indices_of_weight(0).size() == 1);
}

TEST_CASE("vector partitions") {
  using P = std::vector<std::vector<MultiIndex>>;
  CHECK(parts_of(MultiIndex({2})) ==
        P{{MultiIndex({2})}, {MultiIndex({1}), MultiIndex({1})}});
  CHECK(parts_of(MultiIndex({1, 1})) ==
        P{{MultiIndex({1, 1})}, {MultiIndex({1}), MultiIndex({0, 1})}});

  const auto three = vector_partitions(MultiIndex({3}));
  REQUIRE(three.size() == 3);
  CHECK(three[0].parts.size() == 1);
  CHECK(three[0].ordered_count == 1);
  CHECK(three[1].ordered_count == 2);
  CHECK(three[2].ordered_count == 1);

  CHECK_THROWS_AS(vector_partitions(MultiIndex{}), std::invalid_argument);
}

TEST_CASE("vector partition counts add up to ordered decompositions") {
  // Ordered decompositions of (N) are the 2^{N-1} compositions of N.
  for (unsigned big_n = 1; big_n <= 10; ++big_n) {
    Integer total = 0;
    for (const auto& p : vector_partitions(MultiIndex::kappa1_power(big_n))) total += p.ordered_count;
    CHECK(total == Integer(1) << (big_n - 1));
  }
}

TEST_CASE("kappa brackets: documented values") {
  CHECK(kappa_bracket(0, 5, MultiIndex({2})) == 5);
  CHECK(kappa_bracket(1, 1, MultiIndex({1})) == Rational(1, 24));
  CHECK(kappa_bracket(1, 2, MultiIndex({2})) == Rational(1, 8));
  CHECK(kappa_bracket(2, 0, MultiIndex({3})) == Rational(43, 2880));
  CHECK(kappa_bracket(0, 5, MultiIndex({0, 1})) == 1);
  CHECK(kappa_bracket(0, 3, MultiIndex{}) == 1);
  CHECK(kappa_bracket(0, 5, MultiIndex({1})) == 0);
  CHECK(kappa_bracket(0, 2, MultiIndex{}) == 0);
}

TEST_CASE("unordered sum equals the ordered sum for m = (N)") {
  for (int big_n = 1; big_n <= 8; ++big_n) {
    for (int g = 0; g <= 2; ++g) {
      const int n = big_n - 3 * g + 3;
      if (n < 0 || 2 * g - 2 + n <= 0) continue;
      CHECK(kappa_bracket(g, n, MultiIndex::kappa1_power(big_n)) ==
            kappa1_power_by_compositions(g, n, big_n));
    }
  }
}

TEST_CASE("Weil-Petersson volumes") {
  CHECK(wp_volume(0, 3) == 1);
  CHECK(wp_volume(0, 4) == 1);
  CHECK(wp_volume(0, 5) == 5);
  CHECK(wp_volume(1, 1) == Rational(1, 24));
  CHECK(wp_volume(1, 2) == Rational(1, 8));
  CHECK(wp_volume(2, 0) == Rational(43, 2880));
  CHECK(wp_volume(0, 2) == 0);
  CHECK(wp_volume(1, 0) == 0);

  PrecisionScope scope(40);
  const Real pi = pi_real();
  CHECK(abs(wp_physical_volume(1, 1, 40) - pi * pi / 12) < Real("1e-35"));
  CHECK(abs(wp_physical_volume(1, 1, 40) - Real("0.8224670334241132")) < Real("1e-15"));
  CHECK(wp_physical_volume(0, 3, 40) == 1);
  CHECK(abs(wp_physical_volume(2, 0, 40) - 43 * pow(pi, 6) / 2160) < Real("1e-33"));
  CHECK_THROWS_AS(wp_physical_volume(0, 2, 40), std::domain_error);
}

TEST_CASE("volume table provenance") {
  VolumeTable t;
  t.insert(1, 1, Rational(1, 24), Provenance::KaMZTransform);
  t.insert(1, 1, Rational(1, 24), Provenance::GenusExpansion);
  CHECK(t.entries().at({1, 1}).provenance.size() == 2);
  CHECK_THROWS_AS(t.insert(1, 1, Rational(1, 23), Provenance::GenusExpansion), VolumeMismatch);
  CHECK(t.find(1, 1) == Rational(1, 24));
  CHECK_FALSE(t.find(2, 2).has_value());
  CHECK(std::string(provenance_name(Provenance::KaMZTransform)) == "kaMZ-transform");
}

TEST_CASE("Schur polynomials") {
  const auto p = schur_polynomials(SchurKind::P, 3);
  const auto q = schur_polynomials(SchurKind::Q, 3);
  const std::vector<int> w = graded_ring_weights(3);
  const MultiPoly s1 = MultiPoly::variable(w, 3, 1);
  const MultiPoly s2 = MultiPoly::variable(w, 3, 2);
  const MultiPoly s3 = MultiPoly::variable(w, 3, 3);
  CHECK(p[0] == s1);
  CHECK(p[1] == s2 - (s1 * s1).scaled(Rational(1, 2)));
  CHECK(q[1] == s2 + (s1 * s1).scaled(Rational(1, 2)));
  CHECK(q[2] == s3 + s1 * s2 + (s1 * s1 * s1).scaled(Rational(1, 6)));
  CHECK(p[2] == s3 - s1 * s2 + (s1 * s1 * s1).scaled(Rational(1, 6)));
}

TEST_CASE("K series coefficients") {
  const MultiPoly k0 = k_series(0, 2);
  CHECK(k0.coefficient({3}) == Rational(1, 6));
  CHECK(k0.coefficient({4, 1}) == Rational(1, 24));
  CHECK(k0.coefficient({5, 0, 1}) == Rational(1, 120));
  CHECK(k0.coefficient({5, 2}) == Rational(5, 240));
  CHECK(graded_truncation(0, 2) == 7);
  CHECK(graded_truncation(2, 1) == 0);
}

TEST_CASE("K slice equals the substituted free energy") {
  for (int g = 0; g <= 1; ++g) {
    const IdentityReport r = verify_theorem41(g, 6);
    CHECK(r.pass);
    CHECK(r.compared_terms > 0);
    CHECK_FALSE(r.first_mismatch.has_value());
  }
  CHECK(verify_theorem41(2, 4).pass);
}

TEST_CASE("K/F identity fault injection") {
  const int g = 1, w = 3;
  const int t = graded_truncation(g, w);
  const FreeEnergy f = free_energy_poly(g, t, w + 1);
  const MultiPoly k = k_series(g, w);
  REQUIRE(verify_theorem41(f, k, w).pass);

  MultiPoly::Terms terms = k.terms();
  const Exponents target{2, 2};  // x^2 s_1^2
  REQUIRE(terms.count(target) == 1);
  terms[target] += Rational(1, 1000);
  const MultiPoly bad(k.weights(), k.truncation(), terms);
  const IdentityReport r = verify_theorem41(f, bad, w);
  CHECK_FALSE(r.pass);
  REQUIRE(r.first_mismatch.has_value());
  CHECK(r.first_mismatch->monomial == target);
  CHECK(r.first_mismatch->monomial_text == "x^2*s1^2");

  CHECK_THROWS_AS(verify_theorem41(free_energy_poly(g, t - 1, w + 1), k, w), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem41(free_energy_poly(g, t, w), k, w), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorem41(f, k_series(g, w - 1), w), std::invalid_argument);
}
