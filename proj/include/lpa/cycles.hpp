#ifndef LPA_CYCLES_HPP
#define LPA_CYCLES_HPP

// Cycles without exits, their rotation classes and entry paths.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/errors.hpp"
#include "lpa/graph.hpp"
#include "lpa/invariant_lattice.hpp"
#include "lpa/path_census.hpp"

namespace lpa {

// The rotations c_1, ..., c_n of an exit-free cycle; c_1 has the
// lexicographically least edge sequence and c_{i+1} starts one edge later.
struct CycleClass {
  std::vector<Path> rotations;

  std::size_t length() const { return rotations.empty() ? 0 : rotations.front().length(); }
  const Path& representative() const { return rotations.front(); }

  VertexSet vertices(std::size_t universe) const {
    VertexSet s(universe);
    for (const Path& d : rotations) s.insert(d.source);
    return s;
  }

  // The rotation based at v, if v lies on the cycle.
  const Path* rotation_at(VertexId v) const {
    for (const Path& d : rotations) {
      if (d.source == v) return &d;
    }
    return nullptr;
  }

  bool operator==(const CycleClass&) const = default;
};

namespace detail {

inline bool emits_exactly_one(const Graph& g, VertexId v) {
  return g.out_degree(v) == Count(1);
}

inline Path rotate(const Graph& g, const Path& c, std::size_t by) {
  Path p = Path::at(g.source(c.edges[by]));
  for (std::size_t i = 0; i < c.length(); ++i) {
    p = p.then(c.edges[(by + i) % c.length()], g.range(c.edges[(by + i) % c.length()]));
  }
  return p;
}

inline CycleClass make_class(const Graph& g, const Path& cycle) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < cycle.length(); ++i) {
    if (rotate(g, cycle, i).edges < rotate(g, cycle, best).edges) best = i;
  }
  CycleClass cc;
  for (std::size_t i = 0; i < cycle.length(); ++i) {
    cc.rotations.push_back(rotate(g, cycle, (best + i) % cycle.length()));
  }
  return cc;
}

}  // namespace detail

// Rotation classes of simple cycles every vertex of which emits exactly one
// edge. Such a cycle is determined by its vertex set, so classes are keyed by
// it and ordered by their least vertex.
inline std::vector<CycleClass> cycles_without_exits(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> done(n, false);
  std::vector<CycleClass> out;
  for (VertexId v = 0; v < n; ++v) {
    if (done[v] || !detail::emits_exactly_one(g, v)) continue;
    Path walk = Path::at(v);
    VertexId at = v;
    for (std::size_t step = 0; step < n; ++step) {
      if (!detail::emits_exactly_one(g, at)) break;
      EdgeRef e{g.out_bundles(at).front(), 0};
      walk = walk.then(e, g.range(e));
      at = walk.range;
      if (at == v) break;
    }
    if (at != v || walk.is_vertex()) continue;
    CycleClass cc = detail::make_class(g, walk);
    for (const Path& d : cc.rotations) done[d.source] = true;
    out.push_back(std::move(cc));
  }
  return out;
}

inline bool is_exit_free(const Graph& g, const CycleClass& cc) {
  if (cc.rotations.empty()) return false;
  for (const Path& d : cc.rotations) {
    if (!g.is_path(d) || d.source != d.range || d.is_vertex()) return false;
    if (!detail::emits_exactly_one(g, d.source)) return false;
  }
  return true;
}

namespace detail {

inline void require_exit_free(const Graph& g, const CycleClass& cc) {
  if (!is_exit_free(g, cc)) throw ContractError("cycle class is not a cycle without exits");
}

}  // namespace detail

// Membership in C_ne^f: finitely many paths enter the cycle.
inline bool has_finite_entries(const Graph& g, const CycleClass& cc) {
  detail::require_exit_free(g, cc);
  return count_first_hitting_paths(g, cc.vertices(g.vertex_count())).is_finite();
}

// The same membership read off H = closure of c^0: Condition (F) holds for
// H and B_H is empty.
inline bool finite_entries_via_closure(const Graph& g, const CycleClass& cc) {
  detail::require_exit_free(g, cc);
  VertexSet h = saturated_hereditary_closure(g, cc.vertices(g.vertex_count()));
  return breaking_vertices(g, h).empty() && satisfies_condition_F(g, h);
}

// Entries of the cycle: the vertices of c followed by F_E(c^0).
struct DeltaDescriptor {
  CycleClass cycle;
  std::vector<Path> entries;
};

inline DeltaDescriptor entry_paths(const Graph& g, const CycleClass& cc) {
  detail::require_exit_free(g, cc);
  DeltaDescriptor delta{cc, {}};
  for (const Path& d : cc.rotations) delta.entries.push_back(Path::at(d.source));
  for (Path& p : enumerate(g, first_hitting_family(g, cc.vertices(g.vertex_count())),
                           "F_E(c^0)")) {
    delta.entries.push_back(std::move(p));
  }
  return delta;
}

inline Path power(const Path& d, std::size_t m) {
  Path p = Path::at(d.source);
  for (std::size_t i = 0; i < m; ++i) p = concat(p, d);
  return p;
}

// Either alpha == beta, or alpha = lambda c^k and beta = lambda c^q for an
// exit-free cycle c based at r(alpha) (k != q, lambda stripped of trailing
// copies of c).
struct CyclePowerSplit {
  Path lambda;
  Path cycle;  // a vertex when alpha == beta
  std::size_t k = 0;
  std::size_t q = 0;
};

inline std::optional<CyclePowerSplit> cycle_power_split(const Graph& g, const Path& alpha,
                                                        const Path& beta) {
  if (alpha.range != beta.range) throw ContractError("cycle_power_split: ranges differ");
  if (alpha == beta) return CyclePowerSplit{alpha, Path::at(alpha.range), 0, 0};
  const Path& longer = alpha.length() > beta.length() ? alpha : beta;
  const Path& shorter = alpha.length() > beta.length() ? beta : alpha;
  if (longer.length() == shorter.length() || !is_prefix(shorter, longer)) return std::nullopt;

  const Path* d = nullptr;
  std::vector<CycleClass> classes = cycles_without_exits(g);
  for (const CycleClass& cc : classes) {
    if ((d = cc.rotation_at(shorter.range))) break;
  }
  if (d == nullptr) return std::nullopt;

  Path extra = remainder(longer, shorter);
  if (extra.length() % d->length() != 0 || !(power(*d, extra.length() / d->length()) == extra)) {
    return std::nullopt;
  }
  std::size_t diff = extra.length() / d->length();

  // Pull further copies of d off the end of the shorter path.
  Path lambda = shorter;
  std::size_t common = 0;
  while (lambda.length() >= d->length()) {
    Path tail;
    tail.source = g.source(lambda.edges[lambda.length() - d->length()]);
    tail.edges.assign(lambda.edges.end() - static_cast<std::ptrdiff_t>(d->length()),
                      lambda.edges.end());
    tail.range = lambda.range;
    if (!(tail == *d)) break;
    lambda.edges.resize(lambda.length() - d->length());
    lambda.range = tail.source;
    ++common;
  }
  std::size_t k = alpha.length() > beta.length() ? common + diff : common;
  std::size_t q = alpha.length() > beta.length() ? common : common + diff;
  return CyclePowerSplit{lambda, *d, k, q};
}

}  // namespace lpa

#endif  // LPA_CYCLES_HPP
