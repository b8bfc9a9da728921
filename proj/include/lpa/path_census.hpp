#ifndef LPA_PATH_CENSUS_HPP
#define LPA_PATH_CENSUS_HPP

// Counting and listing families of finite paths without unbounded
// enumeration. A family is described by start vertices, target vertices and
// the bundles a path may use; its members are the paths (length >= 0) that
// begin in `starts`, use only allowed bundles and end in `targets`.
//
// The family is infinite exactly when a vertex that is reachable from the
// starts and can still reach a target lies on a cycle, or when such a path
// can use an omega bundle. Otherwise the relevant subgraph is acyclic and a
// dynamic program over it gives the exact size.

#include <optional>
#include <string>
#include <vector>

#include "lpa/count.hpp"
#include "lpa/errors.hpp"
#include "lpa/graph.hpp"

namespace lpa {

struct PathFamily {
  VertexSet starts;
  VertexSet targets;
  std::vector<bool> allowed;  // indexed by BundleId
};

struct InfinitudeWitness {
  enum class Kind { Cycle, OmegaBundle };
  Kind kind = Kind::Cycle;
  VertexId vertex = 0;  // a vertex on the offending cycle
  BundleId bundle = 0;  // the offending omega bundle

  std::string describe(const Graph& g) const {
    if (kind == Kind::OmegaBundle) {
      return "omega bundle '" + g.bundle(bundle).name + "'";
    }
    return "cycle through vertex '" + g.vertex_name(vertex) + "'";
  }
};

struct PathCensus {
  Count total;
  std::optional<InfinitudeWitness> witness;  // set iff total is infinite
};

namespace detail {

inline VertexSet reach_forward(const Graph& g, const PathFamily& f) {
  VertexSet seen = f.starts;
  std::vector<VertexId> stack = f.starts.members();
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (BundleId b : g.out_bundles(v)) {
      if (!f.allowed[b]) continue;
      VertexId r = g.bundle(b).range;
      if (!seen.contains(r)) {
        seen.insert(r);
        stack.push_back(r);
      }
    }
  }
  return seen;
}

inline VertexSet reach_backward(const Graph& g, const PathFamily& f) {
  std::vector<std::vector<BundleId>> incoming(g.vertex_count());
  for (BundleId b = 0; b < g.bundle_count(); ++b) {
    if (f.allowed[b]) incoming[g.bundle(b).range].push_back(b);
  }
  VertexSet seen = f.targets;
  std::vector<VertexId> stack = f.targets.members();
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (BundleId b : incoming[v]) {
      VertexId s = g.bundle(b).source;
      if (!seen.contains(s)) {
        seen.insert(s);
        stack.push_back(s);
      }
    }
  }
  return seen;
}

// Vertices reachable from the starts that can still reach a target.
inline VertexSet relevant_vertices(const Graph& g, const PathFamily& f) {
  VertexSet fwd = reach_forward(g, f);
  VertexSet bwd = reach_backward(g, f);
  VertexSet out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (fwd.contains(v) && bwd.contains(v)) out.insert(v);
  }
  return out;
}

inline bool relevant_bundle(const Graph& g, const PathFamily& f,
                            const VertexSet& relevant, BundleId b) {
  const Bundle& bd = g.bundle(b);
  return f.allowed[b] && relevant.contains(bd.source) && relevant.contains(bd.range);
}

}  // namespace detail

inline PathCensus census(const Graph& g, const PathFamily& f) {
  const VertexSet relevant = detail::relevant_vertices(g, f);

  for (BundleId b = 0; b < g.bundle_count(); ++b) {
    if (detail::relevant_bundle(g, f, relevant, b) &&
        g.bundle(b).multiplicity.is_omega()) {
      return {Count::infinite(), InfinitudeWitness{InfinitudeWitness::Kind::OmegaBundle, 0, b}};
    }
  }

  // Kahn's algorithm on the relevant subgraph.
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<BundleId>> incoming(n);
  for (BundleId b = 0; b < g.bundle_count(); ++b) {
    if (detail::relevant_bundle(g, f, relevant, b)) {
      ++indegree[g.bundle(b).range];
      incoming[g.bundle(b).range].push_back(b);
    }
  }
  std::vector<VertexId> order;
  std::vector<VertexId> ready;
  for (VertexId v : relevant.members()) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (BundleId b : g.out_bundles(v)) {
      if (!detail::relevant_bundle(g, f, relevant, b)) continue;
      if (--indegree[g.bundle(b).range] == 0) ready.push_back(g.bundle(b).range);
    }
  }

  if (order.size() != relevant.size()) {
    // Every leftover vertex has a leftover predecessor; walking backwards
    // n steps lands on a cycle.
    VertexId v = 0;
    for (VertexId u : relevant.members()) {
      if (indegree[u] > 0) {
        v = u;
        break;
      }
    }
    for (std::size_t step = 0; step < n; ++step) {
      for (BundleId b : incoming[v]) {
        if (indegree[g.bundle(b).source] > 0) {
          v = g.bundle(b).source;
          break;
        }
      }
    }
    return {Count::infinite(), InfinitudeWitness{InfinitudeWitness::Kind::Cycle, v, 0}};
  }

  std::vector<Count> paths_from(n, Count(0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    Count c = f.targets.contains(v) ? Count(1) : Count(0);
    for (BundleId b : g.out_bundles(v)) {
      if (!detail::relevant_bundle(g, f, relevant, b)) continue;
      c += to_count(g.bundle(b).multiplicity) * paths_from[g.bundle(b).range];
    }
    paths_from[v] = c;
  }
  Count total = 0;
  for (VertexId v : f.starts.members()) {
    if (relevant.contains(v)) total += paths_from[v];
  }
  return {total, std::nullopt};
}

// Lists the family in order of start vertex, then edge sequence (a path
// precedes its extensions). Throws InfiniteFamilyError for infinite families.
inline std::vector<Path> enumerate(const Graph& g, const PathFamily& f,
                                   const std::string& family_name) {
  PathCensus c = census(g, f);
  if (c.total.is_infinite()) {
    throw InfiniteFamilyError(family_name, c.witness->describe(g));
  }
  const VertexSet relevant = detail::relevant_vertices(g, f);
  std::vector<Path> out;
  auto walk = [&](auto&& self, const Path& p) -> void {
    if (f.targets.contains(p.range)) out.push_back(p);
    for (BundleId b : g.out_bundles(p.range)) {
      if (!detail::relevant_bundle(g, f, relevant, b)) continue;
      for (EdgeRef e : g.edges_of(b)) self(self, p.then(e, g.bundle(b).range));
    }
  };
  for (VertexId v : f.starts.members()) {
    if (relevant.contains(v)) walk(walk, Path::at(v));
  }
  return out;
}

// F_E(H): nontrivial paths that start outside H, stay outside H and end with
// their first vertex in H.
inline PathFamily first_hitting_family(const Graph& g, const VertexSet& h) {
  PathFamily f{h.complement(), h, std::vector<bool>(g.bundle_count(), false)};
  for (BundleId b = 0; b < g.bundle_count(); ++b) {
    f.allowed[b] = !h.contains(g.bundle(b).source);
  }
  return f;
}

// All paths (length >= 0) ending in `targets`.
inline PathFamily paths_ending_in(const Graph& g, const VertexSet& targets) {
  return PathFamily{VertexSet::all(g.vertex_count()), targets,
                    std::vector<bool>(g.bundle_count(), true)};
}

inline PathCensus first_hitting_census(const Graph& g, const VertexSet& h) {
  return census(g, first_hitting_family(g, h));
}

inline Count count_first_hitting_paths(const Graph& g, const VertexSet& h) {
  return first_hitting_census(g, h).total;
}

}  // namespace lpa

#endif  // LPA_PATH_CENSUS_HPP
