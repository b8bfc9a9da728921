#ifndef LPA_BRUTEFORCE_HPP
#define LPA_BRUTEFORCE_HPP

// Direct computation of the center over Q for acyclic graphs with finite
// bundles. The algebra is then finite dimensional with basis p q^* over
// pairs of paths ending at the same sink, and an element is determined by
// its values at the finitely many groupoid points (p, |p| - |q|, q). The
// center is the common kernel of the commutator maps, found by elimination.
// Nothing here goes through the refinement normal form.

#include <cstdint>
#include <map>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/boundary.hpp"
#include "lpa/errors.hpp"
#include "lpa/graph.hpp"
#include "lpa/linear_algebra.hpp"
#include "lpa/path_census.hpp"
#include "lpa/steinberg.hpp"

namespace lpa {

struct BruteForceCenter {
  std::map<std::int64_t, std::vector<AlgebraElement<RationalRing>>> components;

  std::size_t rank(std::int64_t n) const {
    auto it = components.find(n);
    return it == components.end() ? 0 : it->second.size();
  }
};

inline bool supports_bruteforce(const Graph& g) { return is_acyclic(g) && !has_omega_bundle(g); }

// Paths ending at sinks; in an acyclic graph without omega bundles these are
// exactly the boundary points.
inline std::vector<Path> sink_paths(const Graph& g) {
  VertexSet sinks(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.kind(v) == VertexKind::Sink) sinks.insert(v);
  }
  return enumerate(g, paths_ending_in(g, sinks), "paths ending at sinks");
}

inline std::vector<GroupoidPoint> groupoid_points(const Graph& g) {
  std::vector<Path> paths = sink_paths(g);
  std::vector<GroupoidPoint> out;
  for (const Path& p : paths) {
    for (const Path& q : paths) {
      if (p.range != q.range) continue;
      out.push_back({BoundaryPoint{p, {}},
                     static_cast<std::int64_t>(p.length()) - static_cast<std::int64_t>(q.length()),
                     BoundaryPoint{q, {}}});
    }
  }
  return out;
}

inline std::vector<Rational> point_values(const Graph& g, const AlgebraElement<RationalRing>& a,
                                          const std::vector<GroupoidPoint>& points) {
  SteinbergElement<RationalRing> s = pi_raw(g, a);
  std::vector<Rational> out;
  out.reserve(points.size());
  for (const auto& pt : points) out.push_back(evaluate(g, s, pt));
  return out;
}

inline BruteForceCenter center_bruteforce(const Graph& g) {
  if (!supports_bruteforce(g)) {
    throw ContractError("center_bruteforce needs an acyclic graph with finite bundles");
  }
  RationalRing q;
  std::vector<Path> paths = sink_paths(g);
  std::vector<GroupoidPoint> points = groupoid_points(g);
  AlgebraElement<RationalRing> none(g, q);
  std::vector<AlgebraElement<RationalRing>> gens;
  for (const Generator& x : generators(g, none)) gens.push_back(x.element(g, q));

  std::map<std::int64_t, std::vector<Monomial>> by_degree;
  for (const Path& a : paths) {
    for (const Path& b : paths) {
      if (a.range == b.range) by_degree[Monomial{a, b}.degree()].push_back(Monomial{a, b});
    }
  }

  BruteForceCenter out;
  for (const auto& [n, monos] : by_degree) {
    // Column j: the commutators of monos[j] with every generator, evaluated
    // at every point.
    std::vector<std::vector<Rational>> columns;
    for (const Monomial& m : monos) {
      AlgebraElement<RationalRing> b = monomial_element(g, m, q);
      std::vector<Rational> col;
      for (const auto& x : gens) {
        auto vals = point_values(g, b * x - x * b, points);
        col.insert(col.end(), vals.begin(), vals.end());
      }
      columns.push_back(std::move(col));
    }
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    RationalMatrix m(rows, std::vector<Rational>(monos.size()));
    for (std::size_t j = 0; j < monos.size(); ++j) {
      for (std::size_t i = 0; i < rows; ++i) m[i][j] = columns[j][i];
    }
    auto& comp = out.components[n];
    for (const auto& v : nullspace(m, monos.size())) {
      AlgebraElement<RationalRing> z(g, q);
      for (std::size_t j = 0; j < monos.size(); ++j) z.add_term(monos[j], v[j]);
      comp.push_back(std::move(z));
    }
  }
  return out;
}

struct SpanCentrality {
  std::size_t span_rank = 0;     // dimension of the span of the candidates
  std::size_t central_rank = 0;  // dimension of its central part
};

// Dimension of the central subspace of span(candidates), computed through
// common-refinement coordinates. Works for any graph.
inline SpanCentrality central_rank_within(const Graph& g,
                                          const std::vector<AlgebraElement<RationalRing>>& cands) {
  RationalRing q;
  SpanCentrality out;
  if (cands.empty()) return out;
  const std::size_t k = cands.size();
  std::vector<SteinbergElement<RationalRing>> images;
  AlgebraElement<RationalRing> all(g, q);
  for (const auto& c : cands) {
    images.push_back(pi_raw(g, c));
    all += c;
  }
  // Coordinates rows are candidates; transpose so candidates are columns.
  auto transpose = [k](const std::vector<std::vector<Rational>>& rows) {
    RationalMatrix m(rows.empty() ? 0 : rows.front().size(), std::vector<Rational>(k));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t a = 0; a < rows[i].size(); ++a) m[a][i] = rows[i][a];
    }
    return m;
  };
  RationalMatrix span = transpose(joint_coordinates(g, q, images));
  std::size_t span_nullity = nullspace(span, k).size();
  out.span_rank = k - span_nullity;

  RationalMatrix constraints;
  for (const Generator& x : generators(g, all)) {
    auto xe = x.element(g, q);
    std::vector<SteinbergElement<RationalRing>> comms;
    for (const auto& c : cands) comms.push_back(pi_raw(g, c * xe - xe * c));
    RationalMatrix block = transpose(joint_coordinates(g, q, comms));
    constraints.insert(constraints.end(), block.begin(), block.end());
  }
  out.central_rank = nullspace(constraints, k).size() - span_nullity;
  return out;
}

}  // namespace lpa

#endif  // LPA_BRUTEFORCE_HPP
