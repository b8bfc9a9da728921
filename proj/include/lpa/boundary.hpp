#ifndef LPA_BOUNDARY_HPP
#define LPA_BOUNDARY_HPP

// Points of the boundary path space (finite paths ending at sinks or
// infinite emitters, and eventually periodic infinite paths) and of the
// graph groupoid, with pointwise membership tests. These evaluate sets and
// functions directly, independently of the refinement normal form.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/graph.hpp"
#include "lpa/invariant_lattice.hpp"
#include "lpa/steinberg.hpp"

namespace lpa {

// stem followed by period repeated forever; a finite point when period is
// empty.
struct BoundaryPoint {
  Path stem;
  std::vector<EdgeRef> period;

  bool is_finite() const noexcept { return period.empty(); }
  VertexId source() const noexcept { return stem.source; }

  std::optional<EdgeRef> edge_at(std::size_t i) const {
    if (i < stem.length()) return stem.edges[i];
    if (period.empty()) return std::nullopt;
    return period[(i - stem.length()) % period.size()];
  }

  bool operator==(const BoundaryPoint&) const = default;
};

inline bool is_boundary_point(const Graph& g, const BoundaryPoint& x) {
  if (!g.is_path(x.stem)) return false;
  if (x.is_finite()) return g.kind(x.stem.range) != VertexKind::Regular;
  Path loop = Path::at(x.stem.range);
  for (EdgeRef e : x.period) {
    if (!g.contains(e) || g.source(e) != loop.range) return false;
    loop = loop.then(e, g.range(e));
  }
  return loop.range == x.stem.range;
}

// Shortest stem and primitive period, so that equal sequences compare equal.
inline BoundaryPoint canonical(const Graph& g, BoundaryPoint x) {
  if (x.is_finite()) return x;
  const std::size_t p = x.period.size();
  for (std::size_t d = 1; d <= p; ++d) {
    if (p % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = x.period[i] == x.period[i - d];
    if (ok) {
      x.period.resize(d);
      break;
    }
  }
  while (!x.stem.is_vertex() && x.stem.edges.back() == x.period.back()) {
    std::rotate(x.period.rbegin(), x.period.rbegin() + 1, x.period.rend());
    x.stem.range = g.source(x.stem.edges.back());
    x.stem.edges.pop_back();
  }
  return x;
}

inline bool same_point(const Graph& g, const BoundaryPoint& a, const BoundaryPoint& b) {
  return canonical(g, a) == canonical(g, b);
}

inline bool has_prefix(const BoundaryPoint& x, const Path& p) {
  if (x.source() != p.source) return false;
  for (std::size_t i = 0; i < p.length(); ++i) {
    auto e = x.edge_at(i);
    if (!e || !(*e == p.edges[i])) return false;
  }
  return true;
}

// x with its first n edges removed; requires n not beyond a finite end.
inline BoundaryPoint drop(const Graph& g, const BoundaryPoint& x, std::size_t n) {
  if (n <= x.stem.length()) {
    Path prefix = x.stem;
    prefix.edges.resize(n);
    prefix.range = n < x.stem.length() ? g.source(x.stem.edges[n]) : x.stem.range;
    return BoundaryPoint{remainder(x.stem, prefix), x.period};
  }
  if (x.is_finite()) throw ContractError("drop past the end of a finite point");
  std::size_t k = (n - x.stem.length()) % x.period.size();
  BoundaryPoint out;
  out.stem = Path::at(g.source(x.period[k]));
  out.period.assign(x.period.begin() + static_cast<std::ptrdiff_t>(k), x.period.end());
  out.period.insert(out.period.end(), x.period.begin(),
                    x.period.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

inline BoundaryPoint prepend(const Path& p, const BoundaryPoint& x) {
  return BoundaryPoint{concat(p, x.stem), x.period};
}

inline std::vector<VertexId> visited_vertices(const Graph& g, const BoundaryPoint& x) {
  std::vector<VertexId> out{x.stem.source};
  for (EdgeRef e : x.stem.edges) out.push_back(g.range(e));
  for (EdgeRef e : x.period) out.push_back(g.range(e));
  return out;
}

// Direct test of x in U_H u U_S: some vertex of x lies in H, or x is a
// finite path ending in S.
inline bool in_invariant_set(const Graph& g, const AdmissiblePair& pair, const BoundaryPoint& x) {
  for (VertexId v : visited_vertices(g, x)) {
    if (pair.hereditary.contains(v)) return true;
  }
  return x.is_finite() && pair.breaking.contains(x.stem.range);
}

inline bool in_basic_set(const BoundaryPoint& x, const Path& p, const std::vector<EdgeRef>& f) {
  if (!has_prefix(x, p)) return false;
  auto next = x.edge_at(p.length());
  return !next || std::find(f.begin(), f.end(), *next) == f.end();
}

struct GroupoidPoint {
  BoundaryPoint x;
  std::int64_t lag = 0;
  BoundaryPoint y;
};

inline bool in_bisection(const Graph& g, const BasicBisection& b, const GroupoidPoint& pt) {
  if (pt.lag != b.degree() || !in_basic_set(pt.x, b.mu, b.exclusions)) return false;
  if (!pt.x.is_finite() || pt.x.stem.length() >= b.mu.length()) {
    BoundaryPoint tail = drop(g, pt.x, b.mu.length());
    return same_point(g, pt.y, prepend(b.nu, tail));
  }
  return false;
}

template <Ring R>
typename R::value_type evaluate(const Graph& g, const SteinbergElement<R>& s,
                                const GroupoidPoint& pt) {
  auto v = s.ring().zero();
  for (const auto& [b, c] : s.terms()) {
    if (in_bisection(g, b, pt)) v = s.ring().add(v, c);
  }
  return v;
}

// Random boundary point starting at v. Omega bundles use indices below
// `omega_spread`.
template <class Rng>
BoundaryPoint random_boundary_point(const Graph& g, VertexId v, Rng& rng,
                                    std::size_t soft_length = 6, std::uint64_t omega_spread = 4) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Path walk = Path::at(v);
  std::vector<VertexId> positions{v};
  for (std::size_t step = 0;; ++step) {
    VertexId at = walk.range;
    VertexKind k = g.kind(at);
    const bool late = step >= soft_length;
    if (k == VertexKind::Sink) return {walk, {}};
    if (k == VertexKind::InfiniteEmitter && (late || coin(rng) < 0.3)) return {walk, {}};
    auto seen = std::find(positions.begin(), positions.end() - 1, at);
    if (seen != positions.end() - 1 && (late || coin(rng) < 0.5)) {
      auto i = static_cast<std::size_t>(seen - positions.begin());
      BoundaryPoint x;
      x.stem = walk;
      x.stem.edges.resize(i);
      x.stem.range = at;
      x.period.assign(walk.edges.begin() + static_cast<std::ptrdiff_t>(i), walk.edges.end());
      return x;
    }
    auto bundles = g.out_bundles(at);
    BundleId b = bundles[std::uniform_int_distribution<std::size_t>(0, bundles.size() - 1)(rng)];
    const Bundle& bd = g.bundle(b);
    std::uint64_t copies = bd.multiplicity.is_omega() ? omega_spread : bd.multiplicity.value();
    EdgeRef e{b, std::uniform_int_distribution<std::uint64_t>(0, copies - 1)(rng)};
    walk = walk.then(e, bd.range);
    positions.push_back(bd.range);
  }
}

// Random boundary point starting at v whose first edge avoids `f`; returns
// nullopt if the walk keeps hitting excluded edges.
template <class Rng>
std::optional<BoundaryPoint> random_point_avoiding(const Graph& g, VertexId v,
                                                   const std::vector<EdgeRef>& f, Rng& rng) {
  for (int attempt = 0; attempt < 32; ++attempt) {
    BoundaryPoint z = random_boundary_point(g, v, rng);
    if (in_basic_set(z, Path::at(v), f)) return z;
  }
  return std::nullopt;
}

// Points inside each bisection of the given elements plus shifted variants;
// used to compare functions pointwise.
template <Ring R, class Rng>
std::vector<GroupoidPoint> sample_points(const Graph& g,
                                         const std::vector<const SteinbergElement<R>*>& elems,
                                         Rng& rng, std::size_t per_term = 3) {
  std::vector<GroupoidPoint> out;
  for (const auto* s : elems) {
    for (const auto& [b, c] : s->terms()) {
      for (std::size_t i = 0; i < per_term; ++i) {
        auto z = random_point_avoiding(g, b.mu.range, b.exclusions, rng);
        if (!z) continue;
        out.push_back({prepend(b.mu, *z), b.degree(), prepend(b.nu, *z)});
        auto other = random_boundary_point(g, b.mu.range, rng);
        out.push_back({prepend(b.mu, other), b.degree(), prepend(b.nu, other)});
      }
    }
  }
  return out;
}

}  // namespace lpa

#endif  // LPA_BOUNDARY_HPP
