#ifndef LPA_TESTS_SUPPORT_HPP
#define LPA_TESTS_SUPPORT_HPP

// Shared test helpers: corpus access, random graphs and elements, and
// oracles that recompute library answers straight from the definitions.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lpa/lpa.hpp"

namespace lpa::testing {

inline const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"loop",      "a3",    "toeplitz", "rose2",
                                              "infbundle", "twocycles", "entry", "sink_tree"};
  return names;
}

inline Graph corpus(const std::string& name) {
  return load_graph_file(std::string(LPA_CORPUS_DIR) + "/" + name + ".graph");
}

// Names of the second graph get a trailing apostrophe.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::string> names;
  std::vector<Bundle> bundles;
  for (VertexId v = 0; v < a.vertex_count(); ++v) names.push_back(a.vertex_name(v));
  for (VertexId v = 0; v < b.vertex_count(); ++v) names.push_back(b.vertex_name(v) + "'");
  for (const Bundle& bd : a.bundles()) bundles.push_back(bd);
  const auto shift = static_cast<VertexId>(a.vertex_count());
  for (const Bundle& bd : b.bundles()) {
    bundles.push_back({bd.name + "'", bd.source + shift, bd.range + shift, bd.multiplicity});
  }
  return Graph(std::move(names), std::move(bundles));
}

struct RandomGraphOptions {
  std::size_t max_vertices = 6;
  std::size_t max_bundles = 8;
  double omega_probability = 0.2;
  double planted_cycle_probability = 0.35;
};

// Random graph; some get an exit-free cycle planted on their last vertices
// (no other bundle leaves those vertices).
template <class Rng>
Graph random_graph(Rng& rng, const RandomGraphOptions& opt = {}) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t n = pick(1, opt.max_vertices);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));

  std::vector<Bundle> bundles;
  std::size_t cycle_start = n;
  if (coin(rng) < opt.planted_cycle_probability) {
    std::size_t k = pick(1, std::min<std::size_t>(3, n));
    cycle_start = n - k;
    for (std::size_t i = 0; i < k; ++i) {
      auto s = static_cast<VertexId>(cycle_start + i);
      auto r = static_cast<VertexId>(cycle_start + (i + 1) % k);
      bundles.push_back({"c" + std::to_string(i), s, r, Multiplicity::finite(1)});
    }
  }
  const std::size_t extra = pick(0, opt.max_bundles - std::min(opt.max_bundles, bundles.size()));
  for (std::size_t i = 0; i < extra; ++i) {
    if (cycle_start == 0) break;
    auto s = static_cast<VertexId>(pick(0, cycle_start - 1));
    auto r = static_cast<VertexId>(pick(0, n - 1));
    Multiplicity m = coin(rng) < opt.omega_probability
                         ? Multiplicity::omega()
                         : Multiplicity::finite(coin(rng) < 0.8 ? 1 : 2);
    bundles.push_back({"b" + std::to_string(i), s, r, m});
  }
  return Graph(std::move(names), std::move(bundles));
}

// Random path of length <= max_len ending at v, built backwards. Omega
// bundles use indices below 3.
template <class Rng>
Path random_path_into(const Graph& g, VertexId v, Rng& rng, std::size_t max_len = 2) {
  std::vector<EdgeRef> rev;
  VertexId at = v;
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<EdgeRef> in;
    for (BundleId b = 0; b < g.bundle_count(); ++b) {
      const Bundle& bd = g.bundle(b);
      if (bd.range != at) continue;
      std::uint64_t copies = bd.multiplicity.is_omega() ? 3 : bd.multiplicity.value();
      for (std::uint64_t k = 0; k < copies; ++k) in.push_back({b, k});
    }
    if (in.empty()) break;
    EdgeRef e = in[std::uniform_int_distribution<std::size_t>(0, in.size() - 1)(rng)];
    rev.push_back(e);
    at = g.source(e);
  }
  Path p = Path::at(at);
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) p = p.then(*it, g.range(*it));
  return p;
}

template <class Rng>
Monomial random_monomial(const Graph& g, Rng& rng, std::size_t max_len = 2) {
  auto v = static_cast<VertexId>(
      std::uniform_int_distribution<std::size_t>(0, g.vertex_count() - 1)(rng));
  return Monomial{random_path_into(g, v, rng, max_len), random_path_into(g, v, rng, max_len)};
}

template <Ring R, class Rng>
AlgebraElement<R> random_element(const Graph& g, R ring, Rng& rng, std::size_t max_terms = 3,
                                 std::size_t max_len = 2) {
  AlgebraElement<R> a(g, ring);
  const std::size_t terms = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (std::size_t i = 0; i < terms; ++i) {
    a.add_term(random_monomial(g, rng, max_len), ring.from_integer(coeff(rng)));
  }
  return a;
}

// ---------------------------------------------------------------------------
// Oracles. These avoid the library's closure, census and cycle code.

inline std::vector<std::vector<VertexId>> successor_lists(const Graph& g) {
  std::vector<std::vector<VertexId>> out(g.vertex_count());
  for (const Bundle& b : g.bundles()) out[b.source].push_back(b.range);
  return out;
}

inline bool oracle_reaches(const Graph& g, VertexId from, VertexId to) {
  auto succ = successor_lists(g);
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (VertexId w : succ[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

// Number of edges leaving v with range in (or outside) `h`; -1 for infinite.
inline std::int64_t oracle_edges_to(const Graph& g, VertexId v, const VertexSet& h, bool inside) {
  std::int64_t n = 0;
  for (const Bundle& b : g.bundles()) {
    if (b.source != v || h.contains(b.range) != inside) continue;
    if (b.multiplicity.is_omega()) return -1;
    n += static_cast<std::int64_t>(b.multiplicity.value());
  }
  return n;
}

inline bool oracle_is_regular(const Graph& g, VertexId v) {
  std::int64_t out = 0;
  for (const Bundle& b : g.bundles()) {
    if (b.source != v) continue;
    if (b.multiplicity.is_omega()) return false;
    out += static_cast<std::int64_t>(b.multiplicity.value());
  }
  return out > 0;
}

inline bool oracle_hereditary(const Graph& g, const VertexSet& h) {
  for (VertexId v : h.members()) {
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      if (oracle_reaches(g, v, w) && !h.contains(w)) return false;
    }
  }
  return true;
}

inline bool oracle_saturated(const Graph& g, const VertexSet& h) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v) || !oracle_is_regular(g, v)) continue;
    if (oracle_edges_to(g, v, h, false) == 0) return false;
  }
  return true;
}

inline VertexSet subset_from_mask(std::size_t n, std::uint64_t mask) {
  VertexSet s(n);
  for (VertexId v = 0; v < n; ++v) {
    if (mask & (std::uint64_t{1} << v)) s.insert(v);
  }
  return s;
}

// Smallest hereditary saturated superset, by scanning every subset.
inline VertexSet oracle_closure(const Graph& g, const VertexSet& x) {
  const std::size_t n = g.vertex_count();
  VertexSet best = VertexSet::all(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s = subset_from_mask(n, mask);
    if (!x.is_subset_of(s) || s.size() >= best.size()) continue;
    if (oracle_hereditary(g, s) && oracle_saturated(g, s)) best = s;
  }
  return best;
}

inline std::vector<VertexSet> oracle_hereditary_saturated_sets(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s = subset_from_mask(n, mask);
    if (oracle_hereditary(g, s) && oracle_saturated(g, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline VertexSet oracle_breaking(const Graph& g, const VertexSet& h) {
  VertexSet out(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (h.contains(v) || oracle_is_regular(g, v)) continue;
    bool emitter = false;
    for (const Bundle& b : g.bundles()) emitter = emitter || (b.source == v);
    if (!emitter) continue;  // sink
    std::int64_t outside = oracle_edges_to(g, v, h, false);
    if (outside > 0) out.insert(v);
  }
  return out;
}

// Bounded enumeration of a path family given by a membership predicate on
// complete paths and a predicate on admissible prefixes. Omega bundles are
// walked with index 0 only. The family is infinite iff it has a member using
// an omega edge or a member longer than the vertex count (such a member
// repeats a vertex and can be pumped; removing a repeated segment keeps
// members inside, so lengths up to twice the vertex count suffice).
struct BoundedFamily {
  std::vector<Path> members;  // meaningful only when finite
  bool infinite = false;
};

// Members end in `targets`; prefixes that cannot reach a target are cut.
template <class Keep, class Member>
BoundedFamily oracle_family(const Graph& g, const VertexSet& targets, Keep keep_prefix,
                            Member is_member) {
  BoundedFamily out;
  const std::size_t n = g.vertex_count();
  std::vector<bool> useful(n, false);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId t : targets.members()) useful[v] = useful[v] || oracle_reaches(g, v, t);
  }
  auto walk = [&](auto&& self, const Path& p, bool used_omega) -> void {
    if (out.infinite || !useful[p.range]) return;
    if (is_member(p)) {
      if (used_omega || p.length() > n) {
        out.infinite = true;
      } else {
        out.members.push_back(p);
      }
    }
    if (p.length() >= 2 * n + 1) return;
    for (BundleId b = 0; b < g.bundle_count(); ++b) {
      const Bundle& bd = g.bundle(b);
      if (bd.source != p.range) continue;
      std::uint64_t copies = bd.multiplicity.is_omega() ? 1 : bd.multiplicity.value();
      for (std::uint64_t k = 0; k < copies; ++k) {
        Path q = p.then({b, k}, bd.range);
        if (keep_prefix(q)) self(self, q, used_omega || bd.multiplicity.is_omega());
      }
    }
  };
  for (VertexId v = 0; v < n; ++v) {
    Path p = Path::at(v);
    if (keep_prefix(p)) walk(walk, p, false);
  }
  return out;
}

// F_E(H), optionally without paths whose last edge leaves a vertex of `skip`.
inline BoundedFamily oracle_first_hitting(const Graph& g, const VertexSet& h,
                                          const VertexSet* skip = nullptr) {
  auto inner_outside = [&](const Path& p) {
    if (h.contains(p.source)) return false;
    for (std::size_t i = 0; i + 1 < p.length(); ++i) {
      if (h.contains(g.range(p.edges[i]))) return false;
    }
    return true;
  };
  return oracle_family(
      g, h, inner_outside, [&](const Path& p) {
        if (p.is_vertex() || !h.contains(p.range)) return false;
        if (skip && skip->contains(g.source(p.edges.back()))) return false;
        return true;
      });
}

inline BoundedFamily oracle_paths_into(const Graph& g, const VertexSet& t) {
  return oracle_family(
      g, t, [](const Path&) { return true; }, [&](const Path& p) { return t.contains(p.range); });
}

inline bool oracle_condition_F(const Graph& g, const VertexSet& h) {
  VertexSet b = oracle_breaking(g, h);
  return !oracle_first_hitting(g, h, &b).infinite && !oracle_paths_into(g, b).infinite;
}

// Simple cycles whose vertices each emit exactly one edge, as vertex sets.
inline std::set<std::vector<VertexId>> oracle_exit_free_cycle_vertex_sets(const Graph& g) {
  std::set<std::vector<VertexId>> out;
  auto single = [&](VertexId v) {
    std::int64_t e = 0;
    for (const Bundle& b : g.bundles()) {
      if (b.source != v) continue;
      e += b.multiplicity.is_omega() ? 2 : static_cast<std::int64_t>(b.multiplicity.value());
    }
    return e == 1;
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    // Follow the unique edge; a cycle closes iff we return to v.
    std::vector<VertexId> seen{v};
    VertexId at = v;
    bool ok = true;
    while (ok) {
      if (!single(at)) {
        ok = false;
        break;
      }
      VertexId next = 0;
      for (const Bundle& b : g.bundles()) {
        if (b.source == at) next = b.range;
      }
      if (next == v) break;
      if (std::find(seen.begin(), seen.end(), next) != seen.end()) {
        ok = false;
        break;
      }
      seen.push_back(next);
      at = next;
    }
    if (ok) {
      std::sort(seen.begin(), seen.end());
      out.insert(seen);
    }
  }
  return out;
}

// Every path of length <= max_len; omega bundles contribute indices below
// `omega_spread`.
inline std::vector<Path> all_paths(const Graph& g, std::size_t max_len,
                                   std::uint64_t omega_spread = 2) {
  std::vector<Path> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(Path::at(v));
  std::vector<Path> frontier = out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      for (BundleId b : g.out_bundles(p.range)) {
        const Bundle& bd = g.bundle(b);
        std::uint64_t copies = bd.multiplicity.is_omega() ? omega_spread : bd.multiplicity.value();
        for (std::uint64_t k = 0; k < copies; ++k) next.push_back(p.then({b, k}, bd.range));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

// Monomials alpha beta^* of degree n with |alpha|, |beta| <= max_len.
template <Ring R>
std::vector<AlgebraElement<R>> monomials_of_degree(const Graph& g, std::int64_t n,
                                                   std::size_t max_len, R ring = R{}) {
  std::vector<AlgebraElement<R>> out;
  auto paths = all_paths(g, max_len);
  for (const Path& a : paths) {
    for (const Path& b : paths) {
      if (a.range != b.range) continue;
      if (static_cast<std::int64_t>(a.length()) - static_cast<std::int64_t>(b.length()) != n) {
        continue;
      }
      AlgebraElement<R> m(g, ring);
      m.add_term(Monomial{a, b}, ring.one());
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace lpa::testing

#endif  // LPA_TESTS_SUPPORT_HPP
