#ifndef LPA_REPORT_HPP
#define LPA_REPORT_HPP

// Reports behind the lpa_center commands. Each report carries a JSON object
// (key order fixed, so output is byte-stable) and a text rendering.

#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lpa/boundary.hpp"
#include "lpa/bruteforce.hpp"
#include "lpa/center.hpp"
#include "lpa/cycles.hpp"
#include "lpa/invariant_lattice.hpp"
#include "lpa/json.hpp"
#include "lpa/steinberg.hpp"

namespace lpa {

inline constexpr int kReportSchemaVersion = 1;

struct Report {
  Json json;
  std::string text;
  int exit_code = 0;
};

namespace detail {

inline std::string braces(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : s.members()) {
    if (!first) out += ", ";
    first = false;
    out += g.vertex_name(v);
  }
  return out + "}";
}

inline std::string census_text(const Graph& g, const PathCensus& c) {
  if (c.total.is_finite()) return c.total.to_string();
  return "infinite (" + c.witness->describe(g) + ")";
}

inline Json census_json(const Graph& g, const PathCensus& c) {
  Json out{{"count", c.total.to_string()}};
  if (c.witness) out["witness"] = c.witness->describe(g);
  return out;
}

inline std::string path_text(const Graph& g, const Path& p) {
  if (p.is_vertex()) return g.vertex_name(p.source);
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += ' ';
    out += g.edge_name(p.edges[i]);
  }
  return out;
}

inline Json header(const std::string& command) {
  return Json{{"schema", "lpa-center/" + command}, {"version", kReportSchemaVersion}};
}

}  // namespace detail

inline Report analyze_report(const Graph& g, std::uint64_t cap = kDefaultSubsetCap) {
  Report r;
  r.json = detail::header("analyze");
  std::ostringstream text;

  Json vertices = Json::array();
  text << "vertices:\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::string kind(to_string(g.kind(v)));
    vertices.push_back({{"name", g.vertex_name(v)}, {"kind", kind}});
    text << "  " << g.vertex_name(v) << ": " << kind << "\n";
  }
  if (g.vertex_count() == 0) text << "  none\n";
  r.json["vertices"] = std::move(vertices);

  std::vector<AdmissiblePair> compact = enumerate_compact_pairs(g, cap);
  std::vector<AdmissiblePair> minimal = minimal_pairs_of(compact);
  auto in = [](const std::vector<AdmissiblePair>& list, const VertexSet& h) {
    for (const auto& p : list) {
      if (p.hereditary == h) return true;
    }
    return false;
  };

  Json sets = Json::array();
  text << "hereditary saturated sets:\n";
  for (const VertexSet& h : hereditary_saturated_sets(g, cap)) {
    ConditionFCensus f = condition_f_census(g, h);
    VertexSet b = breaking_vertices(g, h);
    sets.push_back({{"hereditary", vertex_set_json(g, h)},
                    {"breaking", vertex_set_json(g, b)},
                    {"condition_f", f.holds()},
                    {"first_hitting", detail::census_json(g, f.first_hitting)},
                    {"into_breaking", detail::census_json(g, f.into_breaking)},
                    {"minimal", in(minimal, h)}});
    text << "  H = " << detail::braces(g, h) << "  B_H = " << detail::braces(g, b)
         << "  condition F " << (f.holds() ? "holds" : "fails");
    if (!f.first_hitting.total.is_finite()) {
      text << "; F'_E(H) " << detail::census_text(g, f.first_hitting);
    }
    if (!f.into_breaking.total.is_finite()) {
      text << "; paths into B_H " << detail::census_text(g, f.into_breaking);
    }
    if (in(minimal, h)) text << "  minimal";
    text << "\n";
  }
  r.json["hereditary_saturated_sets"] = std::move(sets);

  Json cycles = Json::array();
  text << "cycles without exits:\n";
  for (const CycleClass& cc : cycles_without_exits(g)) {
    PathCensus entries = first_hitting_census(g, cc.vertices(g.vertex_count()));
    cycles.push_back({{"cycle", path_json(g, cc.representative())},
                      {"length", cc.length()},
                      {"entries", detail::census_json(g, entries)},
                      {"finite_entries", entries.total.is_finite()}});
    text << "  " << detail::path_text(g, cc.representative()) << "  length " << cc.length()
         << "  entries " << detail::census_text(g, entries) << "\n";
  }
  if (cycles.empty()) text << "  none\n";
  r.json["cycles_without_exits"] = std::move(cycles);
  r.text = text.str();
  return r;
}

template <Ring R>
Report center_report(const Graph& g, R ring, std::int64_t max_degree = kDefaultDegreeCap,
                     std::uint64_t cap = kDefaultSubsetCap) {
  CenterBasis<R> basis = center_basis(g, ring, max_degree, cap);
  Report r;
  r.json = detail::header("center");
  r.json["ring"] = ring.name();
  r.json["max_degree"] = max_degree;
  std::ostringstream text;
  text << "ring: " << ring.name() << "\n";
  bool all_verified = true;

  auto element = [&](const AlgebraElement<R>& a, bool by_involution) {
    bool ok = is_central(g, a);
    all_verified = all_verified && ok;
    Json e{{"terms", to_json(g, a)}, {"verified", ok}};
    if (by_involution) e["by_involution"] = true;
    text << "  " << (ok ? "[central] " : "[NOT CENTRAL] ") << to_text(g, a) << "\n";
    return e;
  };

  Json degree0 = Json::array();
  text << "degree 0 (" << basis.zero_component.size() << "):\n";
  for (std::size_t i = 0; i < basis.zero_component.size(); ++i) {
    Json e = element(basis.zero_component[i], false);
    e["hereditary"] = vertex_set_json(g, basis.minimal_pairs[i].hereditary);
    e["breaking"] = vertex_set_json(g, basis.minimal_pairs[i].breaking);
    degree0.push_back(std::move(e));
  }
  r.json["degree0"] = std::move(degree0);

  Json lengths = Json::array();
  text << "cycle lengths:";
  for (std::size_t n : nonzero_center_degrees(g)) {
    lengths.push_back(n);
    text << " " << n;
  }
  text << (lengths.empty() ? " none\n" : "\n");
  r.json["lengths"] = std::move(lengths);

  Json components = Json::object();
  for (const auto& [n, elems] : basis.components) {
    Json list = Json::array();
    text << "degree " << n << " (" << elems.size() << (n < 0 ? ", by involution" : "") << "):\n";
    for (const auto& a : elems) list.push_back(element(a, n < 0));
    components[std::to_string(n)] = std::move(list);
  }
  r.json["components"] = std::move(components);
  r.json["all_verified"] = all_verified;
  r.text = text.str();
  r.exit_code = all_verified ? 0 : 1;
  return r;
}

struct VerifyOptions {
  std::int64_t max_degree = 6;
  std::uint64_t cap = kDefaultSubsetCap;
  std::uint32_t seed = 20240607;
  std::size_t samples_per_vertex = 40;
};

namespace detail {

struct PropertyResult {
  std::string name;
  bool applicable = true;
  std::vector<std::string> failures;
};

template <Ring R>
void check_centrality(const Graph& g, R ring, const VerifyOptions& opt,
                      std::vector<std::string>& failures) {
  auto check = [&](const AlgebraElement<R>& a, const std::string& what) {
    if (auto x = find_noncommuting_generator(g, a)) {
      failures.push_back(ring.name() + ": " + what + " " + to_text(g, a) +
                         " does not commute with " + format_monomial(g, x->monomial(g)));
    }
  };
  for (const auto& a : center_zero_generators(g, ring, opt.cap)) check(a, "degree-0 generator");
  for (const auto& a : center_zero_basis(g, ring, opt.cap)) check(a, "degree-0 basis element");
  for (std::int64_t n = 1; n <= opt.max_degree; ++n) {
    for (std::int64_t m : {n, -n}) {
      for (const auto& a : center_component_basis(g, m, ring)) {
        check(a, "degree " + std::to_string(m) + " element");
      }
    }
  }
}

}  // namespace detail

inline Report verify_report(const Graph& g, const VerifyOptions& opt = {}) {
  using detail::PropertyResult;
  std::vector<PropertyResult> results;

  {
    PropertyResult p;
    p.name = "centrality";
    detail::check_centrality(g, IntegerRing{}, opt, p.failures);
    detail::check_centrality(g, RationalRing{}, opt, p.failures);
    detail::check_centrality(g, ModularRing{4}, opt, p.failures);
    results.push_back(std::move(p));
  }

  {
    PropertyResult p;
    p.name = "cycle-entry-equivalence";
    for (const CycleClass& cc : cycles_without_exits(g)) {
      bool direct = has_finite_entries(g, cc);
      bool via_closure = finite_entries_via_closure(g, cc);
      if (direct != via_closure) {
        p.failures.push_back("cycle " + detail::path_text(g, cc.representative()) + ": entries " +
                             (direct ? "finite" : "infinite") + " but closure test says " +
                             (via_closure ? "finite" : "infinite"));
      }
    }
    results.push_back(std::move(p));
  }

  std::vector<AdmissiblePair> compact = enumerate_compact_pairs(g, opt.cap);
  std::vector<AdmissiblePair> minimal = minimal_pairs_of(compact);

  {
    PropertyResult p;
    p.name = "decomposition-disjointness";
    std::mt19937 rng(opt.seed);
    for (const AdmissiblePair& pair : compact) {
      Decomposition d = decompose(g, pair);
      const std::string name = "U(" + detail::braces(g, pair.hereditary) + ")";
      if (!pieces_pairwise_disjoint(g, d)) p.failures.push_back(name + ": pieces overlap");
      // Each sampled boundary point lies in U iff it lies in exactly one
      // piece.
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t i = 0; i < opt.samples_per_vertex; ++i) {
          BoundaryPoint x = random_boundary_point(g, v, rng);
          std::size_t hits = 0;
          for (const UnitBasicSet& piece : d.pieces) hits += in_basic_set(x, piece.path, piece.exclusions);
          bool inside = in_invariant_set(g, pair, x);
          if (hits > 1 || (hits == 1) != inside) {
            p.failures.push_back(name + ": sampled point at " + g.vertex_name(v) + " lies in " +
                                 std::to_string(hits) + " pieces but " +
                                 (inside ? "inside" : "outside") + " U");
            break;
          }
        }
      }
    }
    results.push_back(std::move(p));
  }

  {
    PropertyResult p;
    p.name = "orthogonality";
    IntegerRing z;
    std::vector<AlgebraElement<IntegerRing>> ind;
    for (const auto& m : minimal) ind.push_back(indicator_of_pair(g, m, z));
    for (std::size_t i = 0; i < ind.size(); ++i) {
      const std::string ni = detail::braces(g, minimal[i].hereditary);
      if (!equals(g, ind[i] * ind[i], ind[i])) p.failures.push_back("1_U" + ni + " not idempotent");
      for (std::size_t j = i + 1; j < ind.size(); ++j) {
        if (!is_zero(g, ind[i] * ind[j])) {
          p.failures.push_back("1_U" + ni + " 1_U" + detail::braces(g, minimal[j].hereditary) + " != 0");
        }
      }
    }
    for (const AdmissiblePair& pair : compact) {
      if (pair.hereditary.empty()) continue;
      AlgebraElement<IntegerRing> sum(g, z);
      for (const auto& m : minimal_pairs_below(minimal, pair)) sum += indicator_of_pair(g, m, z);
      if (!equals(g, indicator_of_pair(g, pair, z), sum)) {
        p.failures.push_back("1_U" + detail::braces(g, pair.hereditary) +
                             " differs from the sum of the minimal indicators below it");
      }
    }
    results.push_back(std::move(p));
  }

  {
    PropertyResult p;
    p.name = "bruteforce-rank";
    if (!supports_bruteforce(g)) {
      p.applicable = false;
    } else {
      BruteForceCenter bf = center_bruteforce(g);
      for (const auto& [n, comp] : bf.components) {
        std::size_t expected = n == 0 ? minimal.size() : 0;
        if (comp.size() != expected) {
          p.failures.push_back("degree " + std::to_string(n) + ": linear algebra gives rank " +
                               std::to_string(comp.size()) + ", expected " +
                               std::to_string(expected));
        }
      }
      if (bf.components.empty() && !minimal.empty()) {
        p.failures.push_back("degree 0: linear algebra gives rank 0, expected " +
                             std::to_string(minimal.size()));
      }
    }
    results.push_back(std::move(p));
  }

  Report r;
  r.json = detail::header("verify");
  std::ostringstream text;
  Json props = Json::array();
  Json failed = Json::array();
  for (const auto& p : results) {
    const bool passed = p.failures.empty();
    Json j{{"name", p.name}, {"applicable", p.applicable}, {"passed", passed}};
    j["failures"] = p.failures;
    props.push_back(std::move(j));
    if (!passed) failed.push_back(p.name);
    text << (p.applicable ? (passed ? "pass" : "FAIL") : "skip") << "  " << p.name << "\n";
    for (const auto& f : p.failures) text << "      " << f << "\n";
  }
  r.json["properties"] = std::move(props);
  r.json["failed"] = failed;
  r.json["passed"] = failed.empty();
  r.exit_code = failed.empty() ? 0 : 1;
  r.text = text.str();
  return r;
}

}  // namespace lpa

#endif  // LPA_REPORT_HPP
