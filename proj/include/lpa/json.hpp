#ifndef LPA_JSON_HPP
#define LPA_JSON_HPP

// JSON encodings. Edge references are edge names as printed by
// Graph::edge_name, coefficients are strings in the ring's text format, and
// every path-valued field comes with the vertex it ends at ("range") so that
// vertex paths are representable.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/graph.hpp"
#include "lpa/invariant_lattice.hpp"
#include "lpa/steinberg.hpp"

namespace lpa {

using Json = nlohmann::ordered_json;

inline Json edges_json(const Graph& g, const std::vector<EdgeRef>& edges) {
  Json out = Json::array();
  for (EdgeRef e : edges) out.push_back(g.edge_name(e));
  return out;
}

inline Json path_json(const Graph& g, const Path& p) {
  return Json{{"source", g.vertex_name(p.source)}, {"edges", edges_json(g, p.edges)}};
}

inline Json vertex_set_json(const Graph& g, const VertexSet& s) {
  Json out = Json::array();
  for (VertexId v : s.members()) out.push_back(g.vertex_name(v));
  return out;
}

inline std::string to_string(UnitBasicSet::Kind k) {
  switch (k) {
    case UnitBasicSet::Kind::Vertex: return "vertex";
    case UnitBasicSet::Kind::Cylinder: return "cylinder";
    case UnitBasicSet::Kind::CylinderMinus: return "cylinder-minus";
  }
  return "?";
}

inline Json to_json(const Graph& g, const Decomposition& d) {
  Json out = Json::array();
  for (const UnitBasicSet& piece : d.pieces) {
    out.push_back({{"kind", to_string(piece.kind)},
                   {"path", path_json(g, piece.path)},
                   {"exclusions", edges_json(g, piece.exclusions)}});
  }
  return out;
}

template <Ring R>
Json to_json(const Graph& g, const AlgebraElement<R>& a) {
  Json out = Json::array();
  for (const auto& [m, c] : a.terms()) {
    out.push_back({{"coeff", a.ring().format(c)},
                   {"alpha", edges_json(g, m.alpha.edges)},
                   {"beta", edges_json(g, m.beta.edges)},
                   {"range", g.vertex_name(m.alpha.range)}});
  }
  return out;
}

template <Ring R>
Json to_json(const Graph& g, const SteinbergElement<R>& s) {
  Json out = Json::array();
  for (const auto& [b, c] : s.terms()) {
    out.push_back({{"coeff", s.ring().format(c)},
                   {"mu", edges_json(g, b.mu.edges)},
                   {"nu", edges_json(g, b.nu.edges)},
                   {"exclusions", edges_json(g, b.exclusions)},
                   {"range", g.vertex_name(b.mu.range)}});
  }
  return out;
}

}  // namespace lpa

#endif  // LPA_JSON_HPP
