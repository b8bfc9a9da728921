#ifndef LPA_CENTER_HPP
#define LPA_CENTER_HPP

// Generators and bases of the homogeneous components of the center of
// L_R(E).
//
// Degree 0: indicators of the compact open invariant sets U_{H,B_H}; the
// minimal ones form a basis. Degree n != 0: one element per rotation class
// of exit-free cycles with finitely many entry paths whose length divides n,
// namely sum over d in [c] and entries alpha at s(d) of alpha d^m alpha^*.
// Negative degrees are the involution of the positive ones.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/cycles.hpp"
#include "lpa/invariant_lattice.hpp"
#include "lpa/steinberg.hpp"

namespace lpa {

inline constexpr std::int64_t kDefaultDegreeCap = 12;

template <Ring R>
std::vector<AlgebraElement<R>> center_zero_generators(const Graph& g, R ring = R{},
                                                      std::uint64_t cap = kDefaultSubsetCap) {
  std::vector<AlgebraElement<R>> out;
  for (const auto& pair : enumerate_compact_pairs(g, cap)) {
    if (pair.hereditary.empty()) continue;
    out.push_back(indicator_of_pair(g, pair, ring));
  }
  return out;
}

template <Ring R>
std::vector<AlgebraElement<R>> center_zero_basis(const Graph& g, R ring = R{},
                                                 std::uint64_t cap = kDefaultSubsetCap) {
  std::vector<AlgebraElement<R>> out;
  for (const auto& pair : minimal_compact_pairs(g, cap)) {
    out.push_back(indicator_of_pair(g, pair, ring));
  }
  return out;
}

// [C_ne^f]
inline std::vector<CycleClass> finite_entry_cycle_classes(const Graph& g) {
  std::vector<CycleClass> out;
  for (auto& cc : cycles_without_exits(g)) {
    if (has_finite_entries(g, cc)) out.push_back(std::move(cc));
  }
  return out;
}

// sum over rotations d and entries alpha with r(alpha) = s(d) of
// alpha d^m alpha^*, m >= 1.
template <Ring R>
AlgebraElement<R> cycle_power_element(const Graph& g, const DeltaDescriptor& delta,
                                      std::size_t m, R ring = R{}) {
  AlgebraElement<R> a(g, ring);
  for (const Path& alpha : delta.entries) {
    const Path* d = delta.cycle.rotation_at(alpha.range);
    if (d == nullptr) throw ContractError("entry path does not end on the cycle");
    a.add_term(Monomial{concat(alpha, power(*d, m)), alpha}, ring.one());
  }
  return a;
}

template <Ring R>
std::vector<AlgebraElement<R>> center_component_basis(const Graph& g, std::int64_t n,
                                                      R ring = R{}) {
  if (n == 0) throw ContractError("center_component_basis: degree must be nonzero");
  const auto magnitude = static_cast<std::size_t>(n < 0 ? -n : n);
  std::vector<AlgebraElement<R>> out;
  for (const CycleClass& cc : finite_entry_cycle_classes(g)) {
    if (magnitude % cc.length() != 0) continue;
    AlgebraElement<R> a = cycle_power_element(g, entry_paths(g, cc), magnitude / cc.length(), ring);
    out.push_back(n > 0 ? std::move(a) : a.involution());
  }
  return out;
}

// Z_n != 0 for n != 0 iff one of these lengths divides n.
inline std::set<std::size_t> nonzero_center_degrees(const Graph& g) {
  std::set<std::size_t> out;
  for (const CycleClass& cc : finite_entry_cycle_classes(g)) out.insert(cc.length());
  return out;
}

template <Ring R>
struct CenterBasis {
  std::vector<AdmissiblePair> minimal_pairs;
  std::vector<AlgebraElement<R>> zero_component;
  // Degree-|c| building block of each class in [C_ne^f].
  std::vector<std::pair<CycleClass, AlgebraElement<R>>> positive_components;
  std::int64_t degree_cap = kDefaultDegreeCap;
  // Materialized components for 0 < |n| <= degree_cap (empty lists kept).
  std::map<std::int64_t, std::vector<AlgebraElement<R>>> components;
};

template <Ring R>
CenterBasis<R> center_basis(const Graph& g, R ring = R{},
                            std::int64_t degree_cap = kDefaultDegreeCap,
                            std::uint64_t cap = kDefaultSubsetCap) {
  if (degree_cap < 0) throw InputError("degree cap must be nonnegative");
  CenterBasis<R> basis;
  basis.degree_cap = degree_cap;
  basis.minimal_pairs = minimal_compact_pairs(g, cap);
  for (const auto& pair : basis.minimal_pairs) {
    basis.zero_component.push_back(indicator_of_pair(g, pair, ring));
  }
  for (const CycleClass& cc : finite_entry_cycle_classes(g)) {
    basis.positive_components.emplace_back(cc, cycle_power_element(g, entry_paths(g, cc), 1, ring));
  }
  for (std::int64_t n = 1; n <= degree_cap; ++n) {
    basis.components[n] = center_component_basis(g, n, ring);
    basis.components[-n] = center_component_basis(g, -n, ring);
  }
  return basis;
}

}  // namespace lpa

#endif  // LPA_CENTER_HPP
