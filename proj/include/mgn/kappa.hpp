#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mgn/multipoly.hpp"
#include "mgn/rational.hpp"
#include "mgn/real.hpp"
#include "mgn/tau.hpp"

namespace mgn {

/// Exponent vector m = (m_1, m_2, ...) of a kappa monomial
/// kappa_1^{m_1} kappa_2^{m_2} ...; trailing zeros are trimmed.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> exponents);

  /// e_a: the multi-index with a single 1 in slot a (a >= 1).
  static MultiIndex unit(int a);
  /// (count, 0, 0, ...)
  static MultiIndex kappa1_power(unsigned count);

  /// m_a for a >= 1 (zero beyond the stored length).
  unsigned operator[](int a) const;
  const std::vector<unsigned>& exponents() const { return m_; }
  int max_slot() const { return static_cast<int>(m_.size()); }

  /// |m| = sum_a a * m_a
  long weight() const;
  /// ||m|| = sum_a m_a
  long length() const;
  bool is_zero() const { return m_.empty(); }
  /// m! = prod_a m_a!
  Integer factorial() const;

  std::string str() const;

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> m_;
};

/// All multi-indices of a given weight, i.e. integer partitions of `weight`
/// with m_a = number of parts equal to a. Deterministic order.
std::vector<MultiIndex> multi_indices_of_weight(int weight);

/// One unordered decomposition m = m^(1) + ... + m^(k) into nonzero parts,
/// parts listed in lexicographically non-increasing order.
struct VectorPartition {
  std::vector<MultiIndex> parts;
  /// Number of ordered decompositions this multiset represents,
  /// k! / prod(multiplicities!).
  Integer ordered_count;
};

/// Streams every vector partition of a nonzero `m` exactly once. Partitions
/// come in lexicographically decreasing order of their part sequences.
void for_each_vector_partition(
    const MultiIndex& m, const std::function<void(const VectorPartition&)>& fn);
std::vector<VectorPartition> vector_partitions(const MultiIndex& m);

/// <kappa_1^{m_1} kappa_2^{m_2} ...> on M_{g,n}. Zero for unstable (g, n) or
/// when |m| != 3g - 3 + n. Evaluated by the signed sum over decompositions of
/// m into descendant brackets <tau_0^n tau_{|m^(1)|+1} ... tau_{|m^(k)|+1}>.
Rational kappa_bracket(int genus, int n, const MultiIndex& m);

/// V_{g,n} = <kappa_1^{3g-3+n}>; 0 for 2g + n <= 2, V_{0,3} = 1.
Rational wp_volume(int genus, int n);

/// (2 pi^2)^d V_{g,n} / d!, d = 3g - 3 + n, at `digits` decimal digits.
/// Throws std::domain_error for unstable (g, n).
Real wp_physical_volume(int genus, int n, unsigned digits);

enum class Provenance { KaMZTransform, GenusExpansion };

const char* provenance_name(Provenance p);

/// V_{g,n} values tagged by the pipeline that produced them. A second
/// insertion of the same (g, n) from another pipeline must agree exactly.
class VolumeTable {
 public:
  struct Entry {
    Rational value;
    std::set<Provenance> provenance;
  };

  /// Throws VolumeMismatch when a value for (g, n) already exists and differs.
  void insert(int genus, int n, const Rational& value, Provenance p);

  const std::map<std::pair<int, int>, Entry>& entries() const {
    return entries_;
  }
  std::optional<Rational> find(int genus, int n) const;

 private:
  std::map<std::pair<int, int>, Entry> entries_;
};

class VolumeMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// -- The graded ring used for K, B and the Schur substitutions. --------------
//
// Variable 0 is x (weight 1); variable a >= 1 is s_a (or t_a for B) with
// weight a. A ring with truncation T carries T graded variables.
std::vector<int> graded_ring_weights(int truncation);
std::vector<std::string> graded_ring_names(int truncation,
                                           const std::string& letter);

/// Weighted-degree truncation of the genus-g slice of K (or B) when the
/// kappa-degree |m| is bounded by `max_weight`: n + |m| = 2|m| - 3g + 3.
int graded_truncation(int genus, int max_weight);

enum class SchurKind { P, Q };

/// p_j from 1 - exp(-sum lambda^i s_i) = sum lambda^j p_j  (kind P), or
/// q_j from exp(sum lambda^i s_i) = 1 + sum lambda^j q_j     (kind Q),
/// j = 1..j_max, in the graded ring with truncation max(j_max, truncation).
std::vector<MultiPoly> schur_polynomials(SchurKind kind, int j_max);
std::vector<MultiPoly> schur_polynomials(SchurKind kind, int j_max,
                                         int truncation);

/// Genus-g slice of K restricted to kappa-degree |m| <= max_weight:
/// coefficient of x^n prod s_a^{m_a} is <kappa^m>_{g,n} / (n! prod m_a!).
MultiPoly k_series(int genus, int max_weight);

struct IdentityReport {
  bool pass = false;
  std::size_t compared_terms = 0;
  struct Mismatch {
    Exponents monomial;
    std::string monomial_text;
    Rational lhs;
    Rational rhs;
  };
  std::optional<Mismatch> first_mismatch;
};

/// Coefficient-by-coefficient comparison of two polynomials in the same
/// ring; the first differing monomial (in exponent order) is reported.
IdentityReport compare_polys(const MultiPoly& lhs, const MultiPoly& rhs,
                             const std::vector<std::string>& names);

/// Compares K_g with F_g(x, 0, p_1, p_2, ...) coefficient by coefficient for
/// kappa-degree up to max_weight.
IdentityReport verify_theorem41(int genus, int max_weight);

/// Same comparison with caller-supplied sides. Throws std::invalid_argument
/// when the free-energy window cannot produce every monomial of the
/// requested slice or the K slice lives in a different ring.
IdentityReport verify_theorem41(const FreeEnergy& f, const MultiPoly& k,
                                int max_weight);

}  // namespace mgn
