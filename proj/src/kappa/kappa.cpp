#include "mgn/kappa.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mgn {

// -- MultiIndex ---------------------------------------------------------------

MultiIndex::MultiIndex(std::vector<unsigned> exponents)
    : m_(std::move(exponents)) {
  while (!m_.empty() && m_.back() == 0) m_.pop_back();
}

MultiIndex MultiIndex::unit(int a) {
  if (a < 1) throw std::invalid_argument("MultiIndex::unit: slot must be >= 1");
  std::vector<unsigned> m(static_cast<std::size_t>(a), 0);
  m[a - 1] = 1;
  return MultiIndex(std::move(m));
}

MultiIndex MultiIndex::kappa1_power(unsigned count) {
  return MultiIndex(std::vector<unsigned>{count});
}

unsigned MultiIndex::operator[](int a) const {
  if (a < 1) throw std::out_of_range("MultiIndex: slot must be >= 1");
  const auto i = static_cast<std::size_t>(a - 1);
  return i < m_.size() ? m_[i] : 0;
}

long MultiIndex::weight() const {
  long w = 0;
  for (std::size_t i = 0; i < m_.size(); ++i) w += static_cast<long>(i + 1) * m_[i];
  return w;
}

long MultiIndex::length() const {
  long l = 0;
  for (unsigned v : m_) l += v;
  return l;
}

Integer MultiIndex::factorial() const {
  Integer f = 1;
  for (unsigned v : m_) f *= mgn::factorial(v);
  return f;
}

std::string MultiIndex::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < m_.size(); ++i) os << (i ? "," : "") << m_[i];
  os << ")";
  return os.str();
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  std::vector<unsigned> r(std::max(a.m_.size(), b.m_.size()), 0);
  for (std::size_t i = 0; i < a.m_.size(); ++i) r[i] += a.m_[i];
  for (std::size_t i = 0; i < b.m_.size(); ++i) r[i] += b.m_[i];
  return MultiIndex(std::move(r));
}

std::vector<MultiIndex> multi_indices_of_weight(int weight) {
  if (weight < 0) return {};
  std::vector<MultiIndex> out;
  std::vector<unsigned> m(static_cast<std::size_t>(weight), 0);
  // Largest part first, each part size chosen with decreasing multiplicity.
  std::function<void(int, int)> visit = [&](int part, int remaining) {
    if (remaining == 0) {
      out.emplace_back(m);
      return;
    }
    if (part == 0) return;
    for (int k = remaining / part; k >= 0; --k) {
      m[part - 1] = static_cast<unsigned>(k);
      visit(part - 1, remaining - k * part);
    }
    m[part - 1] = 0;
  };
  visit(weight, weight);
  return out;
}

// -- Vector partitions ----------------------------------------------------------

void for_each_vector_partition(
    const MultiIndex& m, const std::function<void(const VectorPartition&)>& fn) {
  if (m.is_zero()) {
    throw std::invalid_argument("vector_partitions: zero multi-index");
  }
  using Vec = std::vector<unsigned>;
  const std::size_t dim = m.exponents().size();
  std::vector<Vec> parts;

  auto emit = [&] {
    VectorPartition vp;
    vp.parts.reserve(parts.size());
    Integer denom = 1;
    std::size_t run = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      vp.parts.emplace_back(parts[i]);
      if (i > 0 && parts[i] == parts[i - 1]) {
        ++run;
      } else {
        denom *= factorial(run);
        run = 1;
      }
    }
    denom *= factorial(run);
    vp.ordered_count = factorial(parts.size()) / denom;
    fn(vp);
  };

  // Recursively choose the next part p <= remaining (componentwise) and
  // p <=_lex bound, scanning candidates in decreasing lexicographic order.
  std::function<void(const Vec&, const Vec&)> recurse;
  recurse = [&](const Vec& remaining, const Vec& bound) {
    if (std::all_of(remaining.begin(), remaining.end(),
                    [](unsigned v) { return v == 0; })) {
      emit();
      return;
    }
    Vec p(dim, 0);
    std::function<void(std::size_t, bool)> choose = [&](std::size_t i,
                                                        bool tight) {
      if (i == dim) {
        if (std::all_of(p.begin(), p.end(), [](unsigned v) { return v == 0; }))
          return;
        Vec rest(dim);
        for (std::size_t k = 0; k < dim; ++k) rest[k] = remaining[k] - p[k];
        parts.push_back(p);
        recurse(rest, p);
        parts.pop_back();
        return;
      }
      const unsigned hi = tight ? std::min(remaining[i], bound[i]) : remaining[i];
      for (unsigned v = hi + 1; v-- > 0;) {
        p[i] = v;
        choose(i + 1, tight && v == bound[i]);
      }
      p[i] = 0;
    };
    choose(0, true);
  };

  Vec start = m.exponents();
  recurse(start, start);
}

std::vector<VectorPartition> vector_partitions(const MultiIndex& m) {
  std::vector<VectorPartition> out;
  for_each_vector_partition(m, [&](const VectorPartition& vp) { out.push_back(vp); });
  return out;
}

// -- kappa brackets and volumes ------------------------------------------------

Rational kappa_bracket(int genus, int n, const MultiIndex& m) {
  if (genus < 0 || n < 0 || 2 * genus - 2 + n <= 0) return Rational{};
  if (m.weight() != 3L * genus - 3 + n) return Rational{};
  if (m.is_zero()) return tau_bracket(genus, std::vector<int>(n, 0));

  const long len = m.length();
  Rational sum;
  for_each_vector_partition(m, [&](const VectorPartition& vp) {
    std::vector<int> d(static_cast<std::size_t>(n), 0);
    Integer part_factorials = 1;
    for (const MultiIndex& part : vp.parts) {
      d.push_back(static_cast<int>(part.weight()) + 1);
      part_factorials *= part.factorial();
    }
    const Rational tau = tau_bracket(genus, std::move(d));
    if (tau.is_zero()) return;
    const std::size_t k = vp.parts.size();
    Rational term = tau * Rational(vp.ordered_count,
                                   factorial(k) * part_factorials);
    if ((len - static_cast<long>(k)) % 2 != 0) term = -term;
    sum += term;
  });
  return sum * Rational(m.factorial());
}

Rational wp_volume(int genus, int n) {
  if (genus < 0 || n < 0 || 2 * genus + n <= 2) return Rational{};
  return kappa_bracket(genus, n,
                       MultiIndex::kappa1_power(static_cast<unsigned>(3 * genus - 3 + n)));
}

Real wp_physical_volume(int genus, int n, unsigned digits) {
  if (genus < 0 || n < 0 || 2 * genus + n <= 2) {
    throw std::domain_error("wp_physical_volume: (g, n) = (" +
                            std::to_string(genus) + ", " + std::to_string(n) +
                            ") is unstable");
  }
  PrecisionScope scope(digits + 10);
  const int d = 3 * genus - 3 + n;
  const Real two_pi2 = 2 * pi_real() * pi_real();
  Real v = to_real(wp_volume(genus, n) / Rational(factorial(static_cast<unsigned long>(d))));
  return Real(boost::multiprecision::pow(two_pi2, d) * v);
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::KaMZTransform:
      return "kaMZ-transform";
    case Provenance::GenusExpansion:
      return "genus-expansion";
  }
  return "unknown";
}

void VolumeTable::insert(int genus, int n, const Rational& value, Provenance p) {
  auto [it, fresh] = entries_.try_emplace({genus, n}, Entry{value, {p}});
  if (fresh) return;
  if (it->second.value != value) {
    throw VolumeMismatch("VolumeTable: V_{" + std::to_string(genus) + "," +
                         std::to_string(n) + "} = " + it->second.value.str() +
                         " already recorded, " + provenance_name(p) +
                         " gives " + value.str());
  }
  it->second.provenance.insert(p);
}

std::optional<Rational> VolumeTable::find(int genus, int n) const {
  auto it = entries_.find({genus, n});
  if (it == entries_.end()) return std::nullopt;
  return it->second.value;
}

// -- Graded ring, Schur polynomials, K ------------------------------------------

std::vector<int> graded_ring_weights(int truncation) {
  std::vector<int> w{1};
  for (int a = 1; a <= truncation; ++a) w.push_back(a);
  return w;
}

std::vector<std::string> graded_ring_names(int truncation,
                                           const std::string& letter) {
  std::vector<std::string> names{"x"};
  for (int a = 1; a <= truncation; ++a) names.push_back(letter + std::to_string(a));
  return names;
}

int graded_truncation(int genus, int max_weight) {
  return std::max(0, 2 * max_weight - 3 * genus + 3);
}

std::vector<MultiPoly> schur_polynomials(SchurKind kind, int j_max) {
  return schur_polynomials(kind, j_max, j_max);
}

std::vector<MultiPoly> schur_polynomials(SchurKind kind, int j_max,
                                         int truncation) {
  if (j_max < 1) throw std::invalid_argument("schur_polynomials: j_max < 1");
  const std::vector<int> w = graded_ring_weights(truncation);
  const Rational sign = kind == SchurKind::P ? Rational(-1) : Rational(1);
  auto s = [&](int i) {
    return i <= truncation ? MultiPoly::variable(w, truncation, static_cast<std::size_t>(i))
                           : MultiPoly(w, truncation);
  };
  // E = exp(sign * sum lambda^i s_i):  j e_j = sum_{i=1}^{j} i * sign * s_i e_{j-i}
  std::vector<MultiPoly> e{MultiPoly::constant(w, truncation, 1)};
  for (int j = 1; j <= j_max; ++j) {
    MultiPoly acc(w, truncation);
    for (int i = 1; i <= j; ++i) {
      acc = acc + (s(i) * e[j - i]).scaled(Rational(i) * sign);
    }
    e.push_back(acc.scaled(Rational(1, j)));
  }
  std::vector<MultiPoly> out;
  for (int j = 1; j <= j_max; ++j) {
    out.push_back(kind == SchurKind::P ? -e[j] : e[j]);
  }
  return out;
}

MultiPoly k_series(int genus, int max_weight) {
  if (genus < 0 || max_weight < 0) {
    throw std::invalid_argument("k_series: negative argument");
  }
  const int t = graded_truncation(genus, max_weight);
  MultiPoly::Terms terms;
  for (int w = std::max(0, 3 * genus - 3); w <= max_weight; ++w) {
    const int n = w - 3 * genus + 3;
    if (2 * genus - 2 + n <= 0) continue;
    for (const MultiIndex& m : multi_indices_of_weight(w)) {
      const Rational value = kappa_bracket(genus, n, m);
      if (value.is_zero()) continue;
      Exponents e{static_cast<unsigned>(n)};
      e.insert(e.end(), m.exponents().begin(), m.exponents().end());
      terms.emplace(std::move(e),
                    value / Rational(Integer(factorial(static_cast<unsigned long>(n)) *
                                             m.factorial())));
    }
  }
  return MultiPoly(graded_ring_weights(t), t, std::move(terms));
}

IdentityReport compare_polys(const MultiPoly& lhs, const MultiPoly& rhs,
                             const std::vector<std::string>& names) {
  IdentityReport report;
  auto li = lhs.terms().begin();
  auto ri = rhs.terms().begin();
  const auto le = lhs.terms().end();
  const auto re = rhs.terms().end();
  while (li != le || ri != re) {
    Exponents e;
    Rational a, b;
    if (ri == re || (li != le && li->first < ri->first)) {
      e = li->first;
      a = li->second;
      ++li;
    } else if (li == le || ri->first < li->first) {
      e = ri->first;
      b = ri->second;
      ++ri;
    } else {
      e = li->first;
      a = li->second;
      b = ri->second;
      ++li;
      ++ri;
    }
    ++report.compared_terms;
    if (a != b && !report.first_mismatch) {
      MultiPoly mono(lhs.weights(), std::max(lhs.truncation(), lhs.weighted_degree(e)),
                     MultiPoly::Terms{{e, Rational(1)}});
      report.first_mismatch =
          IdentityReport::Mismatch{e, mono.str(names), a, b};
    }
  }
  report.pass = !report.first_mismatch.has_value();
  return report;
}

IdentityReport verify_theorem41(int genus, int max_weight) {
  const int t = graded_truncation(genus, max_weight);
  return verify_theorem41(free_energy_poly(genus, t, max_weight + 1),
                          k_series(genus, max_weight), max_weight);
}

IdentityReport verify_theorem41(const FreeEnergy& f, const MultiPoly& k,
                                int max_weight) {
  const int t = graded_truncation(f.genus, max_weight);
  if (f.max_insertions < t || f.max_index < max_weight + 1) {
    throw std::invalid_argument(
        "verify_theorem41: free-energy window (insertions <= " +
        std::to_string(f.max_insertions) + ", index <= " +
        std::to_string(f.max_index) + ") cannot cover kappa-degree " +
        std::to_string(max_weight) + " (needs insertions <= " +
        std::to_string(t) + ", index <= " + std::to_string(max_weight + 1) +
        ")");
  }
  if (k.weights() != graded_ring_weights(t) || k.truncation() != t) {
    throw std::invalid_argument(
        "verify_theorem41: K slice is not in the graded ring of truncation " +
        std::to_string(t));
  }

  const std::vector<int> w = graded_ring_weights(t);
  const std::vector<MultiPoly> p =
      schur_polynomials(SchurKind::P, std::max(1, f.max_index - 1), t);
  std::vector<MultiPoly> images;
  images.push_back(MultiPoly::variable(w, t, 0));  // t_0 -> x
  images.emplace_back(w, t);                       // t_1 -> 0
  for (int i = 2; i <= f.max_index; ++i) images.push_back(p[i - 2]);  // t_i -> p_{i-1}

  const MultiPoly substituted = f.poly.substitute(images);
  return compare_polys(k, substituted, graded_ring_names(t, "s"));
}

}  // namespace mgn
