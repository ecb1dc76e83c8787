#pragma once

#include <cstddef>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "mgn/multipoly.hpp"
#include "mgn/rational.hpp"

namespace mgn {

/// Identifies <tau_{d_1} ... tau_{d_n}>_g. Descendants are kept sorted in
/// descending order, so equal multisets compare (and hash) equal.
class TauKey {
 public:
  TauKey(int genus, std::vector<int> descendants);

  int genus() const { return genus_; }
  const std::vector<int>& descendants() const { return descendants_; }
  int size() const { return static_cast<int>(descendants_.size()); }
  long descendant_sum() const;

  /// 2g - 2 + n > 0
  bool stable() const { return 2 * genus_ - 2 + size() > 0; }
  /// Sum of d_i equals dim M_{g,n} = 3g - 3 + n.
  bool degree_matches() const;

  friend bool operator==(const TauKey&, const TauKey&) = default;

 private:
  int genus_;
  std::vector<int> descendants_;
};

struct TauKeyHash {
  std::size_t operator()(const TauKey& k) const noexcept;
};

/// Memo table for intersection numbers. Entries are written once and never
/// change; lookups take a shared lock and inserts are insert-if-absent, so a
/// table may be shared between threads.
class TauTable {
 public:
  /// Exact <tau_{d_1} ... tau_{d_n}>_g; zero for unstable keys and keys whose
  /// descendant sum differs from 3g - 3 + n.
  Rational bracket(const TauKey& key);

  std::size_t size() const;

 private:
  Rational compute(const TauKey& key);

  mutable std::shared_mutex mutex_;
  std::unordered_map<TauKey, Rational, TauKeyHash> memo_;
};

/// Process-wide table used by the convenience overloads below.
TauTable& default_tau_table();

Rational tau_bracket(const TauKey& key);
Rational tau_bracket(int genus, std::vector<int> descendants);

/// Genus-0 closed form (n-3)! / prod d_i! when sum d_i = n - 3 and n >= 3,
/// otherwise 0. Computed without recursion.
Rational genus0_closed(std::span<const int> descendants);

/// b_0 .. b_{g_max} of the Painleve I recursion: b_0 = -1, b_1 = 1/24,
/// b_{g+1} = (25 g^2 - 1)/24 b_g + 1/2 sum_{m=1}^{g} b_{g+1-m} b_m.
std::vector<Rational> painleve_b(int g_max);

/// <tau_2^{3g-3}>_g = b_g 2^g (3g-3)! / ((5g-3)(5g-5)) for g >= 2.
Rational tau2_power_from_painleve(int genus);

/// Truncated genus-g free energy
///   F_g = sum <tau_0^{l_0} tau_1^{l_1} ...>_g prod t_i^{l_i} / l_i!
/// restricted to at most `max_insertions` insertions and descendant indices
/// at most `max_index`. Variable i of `poly` is t_i; every t_i has weight 1,
/// so the polynomial truncation equals `max_insertions`.
struct FreeEnergy {
  int genus;
  int max_insertions;
  int max_index;
  MultiPoly poly;
};

FreeEnergy free_energy_poly(int genus, int max_insertions, int max_index);

}  // namespace mgn
