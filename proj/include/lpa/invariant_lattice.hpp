#ifndef LPA_INVARIANT_LATTICE_HPP
#define LPA_INVARIANT_LATTICE_HPP

// Hereditary saturated vertex sets, breaking vertices, the finiteness
// condition and the decomposition of the open invariant set U_{H,S} of the
// boundary path space into basic compact open sets.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "lpa/count.hpp"
#include "lpa/errors.hpp"
#include "lpa/graph.hpp"
#include "lpa/path_census.hpp"

namespace lpa {

inline constexpr std::uint64_t kDefaultSubsetCap = std::uint64_t{1} << 16;

inline bool is_hereditary(const Graph& g, const VertexSet& h) {
  for (const Bundle& b : g.bundles()) {
    if (h.contains(b.source) && !h.contains(b.range)) return false;
  }
  return true;
}

// Only regular vertices are constrained.
inline bool is_saturated(const Graph& g, const VertexSet& h) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v) || g.kind(v) != VertexKind::Regular) continue;
    bool all_in = true;
    for (BundleId b : g.out_bundles(v)) all_in = all_in && h.contains(g.bundle(b).range);
    if (all_in) return false;
  }
  return true;
}

inline bool is_hereditary_saturated(const Graph& g, const VertexSet& h) {
  return is_hereditary(g, h) && is_saturated(g, h);
}

inline VertexSet saturated_hereditary_closure(const Graph& g, const VertexSet& x) {
  VertexSet h = forward_closure(g, x);
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (h.contains(v) || g.kind(v) != VertexKind::Regular) continue;
      bool all_in = true;
      for (BundleId b : g.out_bundles(v)) all_in = all_in && h.contains(g.bundle(b).range);
      if (all_in) {
        h.insert(v);
        grew = true;
      }
    }
  }
  return h;
}

namespace detail {

inline void require_hereditary_saturated(const Graph& g, const VertexSet& h) {
  if (h.universe() != g.vertex_count()) throw InputError("vertex set from another graph");
  if (!is_hereditary_saturated(g, h)) {
    throw InputError("vertex set is not hereditary and saturated");
  }
}

// Edges of v landing outside h, weighted by multiplicity.
inline Count edges_leaving(const Graph& g, VertexId v, const VertexSet& h) {
  Count c = 0;
  for (BundleId b : g.out_bundles(v)) {
    if (!h.contains(g.bundle(b).range)) c += to_count(g.bundle(b).multiplicity);
  }
  return c;
}

}  // namespace detail

// Infinite emitters outside H sending a finite, nonzero number of edges
// outside H.
inline VertexSet breaking_vertices(const Graph& g, const VertexSet& h) {
  detail::require_hereditary_saturated(g, h);
  VertexSet out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v) || g.kind(v) != VertexKind::InfiniteEmitter) continue;
    Count leaving = detail::edges_leaving(g, v, h);
    if (leaving.is_finite() && leaving.value() > 0) out.insert(v);
  }
  return out;
}

// Outgoing edges at a breaking vertex, split by whether they leave H.
// The part into H is infinite and kept symbolic as whole bundles.
struct AlphaSplit {
  std::vector<EdgeRef> leaving;    // F_alpha, listed
  std::vector<BundleId> into_h;    // F'_alpha, every edge of these bundles
};

inline AlphaSplit f_alpha_split(const Graph& g, const Path& alpha, const VertexSet& h) {
  if (!g.is_path(alpha)) throw InputError("f_alpha_split: not a path of the graph");
  if (!breaking_vertices(g, h).contains(alpha.range)) {
    throw ContractError("f_alpha_split: range '" + g.vertex_name(alpha.range) +
                        "' is not a breaking vertex");
  }
  AlphaSplit split;
  for (BundleId b : g.out_bundles(alpha.range)) {
    if (h.contains(g.bundle(b).range)) {
      split.into_h.push_back(b);
    } else {
      auto es = g.edges_of(b);
      split.leaving.insert(split.leaving.end(), es.begin(), es.end());
    }
  }
  return split;
}

// F'_E(H): members of F_E(H) whose last edge does not leave a breaking vertex.
inline PathFamily first_hitting_family_avoiding_breaking(const Graph& g, const VertexSet& h,
                                                         const VertexSet& breaking) {
  PathFamily f = first_hitting_family(g, h);
  for (BundleId b = 0; b < g.bundle_count(); ++b) {
    const Bundle& bd = g.bundle(b);
    if (breaking.contains(bd.source) && h.contains(bd.range)) f.allowed[b] = false;
  }
  return f;
}

struct ConditionFCensus {
  std::size_t hereditary_size = 0;
  PathCensus first_hitting;  // F'_E(H)
  PathCensus into_breaking;  // paths with range in B_H

  bool holds() const {
    return first_hitting.total.is_finite() && into_breaking.total.is_finite();
  }
};

inline ConditionFCensus condition_f_census(const Graph& g, const VertexSet& h) {
  VertexSet breaking = breaking_vertices(g, h);
  return ConditionFCensus{h.size(),
                          census(g, first_hitting_family_avoiding_breaking(g, h, breaking)),
                          census(g, paths_ending_in(g, breaking))};
}

// The finite vertex set makes |H| finite, so the condition reduces to the
// finiteness of the two path families.
inline bool satisfies_condition_F(const Graph& g, const VertexSet& h) {
  return condition_f_census(g, h).holds();
}

struct AdmissiblePair {
  VertexSet hereditary;
  VertexSet breaking;

  bool operator==(const AdmissiblePair&) const = default;
};

inline bool is_admissible(const Graph& g, const AdmissiblePair& p) {
  return is_hereditary_saturated(g, p.hereditary) &&
         p.breaking.is_subset_of(breaking_vertices(g, p.hereditary));
}

inline bool is_compact_pair(const Graph& g, const VertexSet& h, const VertexSet& s) {
  detail::require_hereditary_saturated(g, h);
  if (!s.is_subset_of(breaking_vertices(g, h))) {
    throw InputError("is_compact_pair: S is not a set of breaking vertices of H");
  }
  return s == breaking_vertices(g, h) && satisfies_condition_F(g, h);
}

inline bool is_compact_pair(const Graph& g, const AdmissiblePair& p) {
  return is_compact_pair(g, p.hereditary, p.breaking);
}

// Z(v), Z(alpha) or Z(alpha \ F_alpha) in the boundary path space.
struct UnitBasicSet {
  enum class Kind { Vertex, Cylinder, CylinderMinus };
  Kind kind = Kind::Vertex;
  Path path;
  std::vector<EdgeRef> exclusions;

  bool operator==(const UnitBasicSet&) const = default;
};

struct Decomposition {
  std::vector<UnitBasicSet> pieces;
};

// Z(p \ F) and Z(q \ G) intersect iff one path extends the other and the
// first extra edge (if any) is not excluded by the shorter one.
inline bool basic_sets_intersect(const Graph& g, const Path& p, const std::vector<EdgeRef>& f,
                                 const Path& q, const std::vector<EdgeRef>& gx) {
  auto check = [&](const Path& shortp, const std::vector<EdgeRef>& shortx,
                   const Path& longp, const std::vector<EdgeRef>& longx) {
    if (!is_prefix(shortp, longp)) return false;
    if (shortp.length() == longp.length()) {
      // Same cylinder: the intersection is Z(p \ (F u G)); empty only when
      // the exclusions cover every edge of a regular range.
      if (g.kind(shortp.range) != VertexKind::Regular) return true;
      std::set<EdgeRef> all(shortx.begin(), shortx.end());
      all.insert(longx.begin(), longx.end());
      return Count(all.size()) != g.out_degree(shortp.range);
    }
    EdgeRef next = longp.edges[shortp.length()];
    return std::find(shortx.begin(), shortx.end(), next) == shortx.end();
  };
  return p.length() <= q.length() ? check(p, f, q, gx) : check(q, gx, p, f);
}

inline bool pieces_pairwise_disjoint(const Graph& g, const Decomposition& d) {
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < d.pieces.size(); ++j) {
      if (basic_sets_intersect(g, d.pieces[i].path, d.pieces[i].exclusions,
                               d.pieces[j].path, d.pieces[j].exclusions)) {
        return false;
      }
    }
  }
  return true;
}

// U_{H,B_H} as a finite disjoint union of basic sets. Only materialized in
// the compact case; otherwise the offending infinite family is reported.
inline Decomposition decompose(const Graph& g, const AdmissiblePair& pair) {
  const VertexSet& h = pair.hereditary;
  detail::require_hereditary_saturated(g, h);
  const VertexSet breaking = breaking_vertices(g, h);
  if (!pair.breaking.is_subset_of(breaking)) {
    throw InputError("decompose: S is not a set of breaking vertices of H");
  }
  if (!(pair.breaking == breaking)) {
    throw InfiniteFamilyError(
        "Z(alpha e), e in F'_alpha, at breaking vertices outside S",
        "S is a proper subset of B_H");
  }

  Decomposition d;
  for (VertexId v : h.members()) {
    d.pieces.push_back({UnitBasicSet::Kind::Vertex, Path::at(v), {}});
  }
  for (Path& p : enumerate(g, first_hitting_family_avoiding_breaking(g, h, breaking),
                           "F'_E(H)")) {
    d.pieces.push_back({UnitBasicSet::Kind::Cylinder, std::move(p), {}});
  }
  for (Path& p : enumerate(g, paths_ending_in(g, breaking),
                           "paths ending at breaking vertices")) {
    AlphaSplit split = f_alpha_split(g, p, h);
    d.pieces.push_back({UnitBasicSet::Kind::CylinderMinus, std::move(p), split.leaving});
  }
  return d;
}

// All hereditary saturated sets, ordered by (size, members). They are the
// closures of vertex subsets; the search visits 2^|E^0| subsets and refuses
// to start when that exceeds `cap`.
inline std::vector<VertexSet> hereditary_saturated_sets(const Graph& g,
                                                        std::uint64_t cap = kDefaultSubsetCap) {
  const std::size_t n = g.vertex_count();
  if (n >= 63 || (std::uint64_t{1} << n) > cap) {
    throw CapExceeded("hereditary set enumeration needs 2^" + std::to_string(n) +
                      " candidate subsets, above the cap of " + std::to_string(cap));
  }
  std::set<std::vector<VertexId>> seen;
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet x(n);
    for (VertexId v = 0; v < n; ++v) {
      if (mask & (std::uint64_t{1} << v)) x.insert(v);
    }
    VertexSet h = saturated_hereditary_closure(g, x);
    if (seen.insert(h.members()).second) out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// T_E^c, including (empty, empty).
inline std::vector<AdmissiblePair> enumerate_compact_pairs(const Graph& g,
                                                           std::uint64_t cap = kDefaultSubsetCap) {
  std::vector<AdmissiblePair> out;
  for (VertexSet& h : hereditary_saturated_sets(g, cap)) {
    if (satisfies_condition_F(g, h)) {
      VertexSet b = breaking_vertices(g, h);
      out.push_back({std::move(h), std::move(b)});
    }
  }
  return out;
}

// Nonempty compact pairs that are minimal under inclusion of H.
inline std::vector<AdmissiblePair> minimal_pairs_of(const std::vector<AdmissiblePair>& compact) {
  std::vector<AdmissiblePair> out;
  for (const auto& p : compact) {
    if (p.hereditary.empty()) continue;
    bool minimal = true;
    for (const auto& q : compact) {
      if (q.hereditary.empty() || q.hereditary == p.hereditary) continue;
      if (q.hereditary.is_subset_of(p.hereditary)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(p);
  }
  return out;
}

inline std::vector<AdmissiblePair> minimal_compact_pairs(const Graph& g,
                                                         std::uint64_t cap = kDefaultSubsetCap) {
  return minimal_pairs_of(enumerate_compact_pairs(g, cap));
}

// The minimal compact pairs whose open set lies inside that of `pair`.
inline std::vector<AdmissiblePair> minimal_pairs_below(const std::vector<AdmissiblePair>& minimal,
                                                       const AdmissiblePair& pair) {
  std::vector<AdmissiblePair> out;
  for (const auto& m : minimal) {
    if (m.hereditary.is_subset_of(pair.hereditary)) out.push_back(m);
  }
  return out;
}

}  // namespace lpa

#endif  // LPA_INVARIANT_LATTICE_HPP
