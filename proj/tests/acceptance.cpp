// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace lpa;
using lpa::testing::corpus;
using lpa::testing::corpus_names;

namespace {

// Collects the first few failure descriptions of one criterion.
struct Check {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failed;
    if (notes.size() < 5) notes.push_back(what);
  }
};

Graph corpus_extra(const std::string& name) {
  return load_graph_file(std::string(LPA_CORPUS_DIR) + "/" + name + ".graph");
}

AlgebraElement<RationalRing> monomial(const Graph& g, const Path& a, const Path& b) {
  AlgebraElement<RationalRing> x(g, RationalRing{});
  x.add_term(Monomial{a, b}, Rational(1));
  return x;
}

// 1. Every emitted element is central over Z, Q and Z/4, |n| <= 6.
template <Ring R>
void centrality_over(Check& c, R ring) {
  for (const auto& name : corpus_names()) {
    Graph g = corpus(name);
    auto label = [&](const auto& x) { return name + " " + ring.name() + ": " + to_text(g, x); };
    for (const auto& x : center_zero_generators(g, ring)) c.expect(is_central(g, x), label(x));
    for (const auto& x : center_zero_basis(g, ring)) c.expect(is_central(g, x), label(x));
    for (std::int64_t n = -6; n <= 6; ++n) {
      if (n == 0) continue;
      for (const auto& x : center_component_basis(g, n, ring)) c.expect(is_central(g, x), label(x));
    }
  }
}

void criterion_centrality(Check& c) {
  auto start = std::chrono::steady_clock::now();
  centrality_over(c, IntegerRing{});
  centrality_over(c, RationalRing{});
  centrality_over(c, ModularRing{4});
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 30.0, "runtime " + std::to_string(secs) + " s exceeds 30 s");
}

// 2. Brute-force dimension equals the number of minimal compact pairs.
void criterion_bruteforce(Check& c) {
  Graph a3 = corpus("a3");
  Graph st = corpus("sink_tree");
  std::vector<std::pair<std::string, Graph>> graphs = {
      {"a3", a3},
      {"sink_tree", st},
      {"a3_point", corpus_extra("a3_point")},
      {"a3_sink_tree", corpus_extra("a3_sink_tree")},
      {"a3+a3", lpa::testing::disjoint_union(a3, a3)},
      {"sink_tree+sink_tree", lpa::testing::disjoint_union(st, st)},
      {"sink_tree+a3", lpa::testing::disjoint_union(st, a3)},
  };
  for (const auto& [name, g] : graphs) {
    auto brute = center_bruteforce(g);
    std::size_t minimal = minimal_compact_pairs(g).size();
    c.expect(brute.rank(0) == minimal, name + ": brute-force rank " +
                                           std::to_string(brute.rank(0)) + " vs " +
                                           std::to_string(minimal) + " minimal pairs");
    for (const auto& [n, xs] : brute.components) {
      if (n != 0) c.expect(xs.empty(), name + ": central part in degree " + std::to_string(n));
    }
    auto both = brute.components[0];
    auto ours = center_zero_basis(g, RationalRing{});
    both.insert(both.end(), ours.begin(), ours.end());
    c.expect(central_rank_within(g, both).span_rank == minimal,
             name + ": computed basis spans a different subspace");
  }
}

// 3. Closed forms for the loop, A3 and the Toeplitz graph.
void criterion_closed_forms(Check& c) {
  RationalRing q;
  Graph loop = corpus("loop");
  VertexId v = loop.vertex("v");
  Path cp = loop.edge_path({loop.bundle_id("c"), 0});
  std::vector<AlgebraElement<RationalRing>> laurent{monomial(loop, Path::at(v), Path::at(v))};
  for (std::size_t n = 1; n <= 6; ++n) {
    laurent.push_back(monomial(loop, power(cp, n), Path::at(v)));
    laurent.push_back(monomial(loop, Path::at(v), power(cp, n)));
  }
  auto span = central_rank_within(loop, laurent);
  c.expect(span.span_rank == 13 && span.central_rank == 13, "loop: Laurent span not central");
  auto basis = center_basis(loop, q, 6);
  c.expect(basis.zero_component.size() == 1 && equals(loop, basis.zero_component[0], laurent[0]),
           "loop: degree 0 is not span{v}");
  for (std::int64_t n = 1; n <= 6; ++n) {
    const auto& pos = basis.components.at(n);
    const auto& neg = basis.components.at(-n);
    c.expect(pos.size() == 1 && equals(loop, pos[0], laurent[2 * n - 1]),
             "loop: degree " + std::to_string(n) + " is not span{c^n}");
    c.expect(neg.size() == 1 && equals(loop, neg[0], laurent[2 * n]),
             "loop: degree " + std::to_string(-n) + " is not span{(c*)^n}");
  }
  // Nothing else central among monomials of the loop up to length 8.
  for (std::int64_t n = -6; n <= 6; ++n) {
    auto cands = lpa::testing::monomials_of_degree(loop, n, 8, q);
    c.expect(central_rank_within(loop, cands).central_rank == 1,
             "loop: extra central elements in degree " + std::to_string(n));
  }

  Graph a3 = corpus("a3");
  auto brute = center_bruteforce(a3);
  AlgebraElement<RationalRing> unit(a3, q);
  for (const char* name : {"v1", "v2", "v3"}) unit += vertex_element(a3, a3.vertex(name), q);
  auto a3_basis = center_zero_basis(a3, q);
  c.expect(brute.rank(0) == 1 && a3_basis.size() == 1 && equals(a3, a3_basis[0], unit),
           "A3: center is not span{v1+v2+v3}");
  for (std::int64_t n = 1; n <= 6; ++n) {
    c.expect(center_component_basis(a3, n, q).empty() && center_component_basis(a3, -n, q).empty(),
             "A3: nonzero degree component");
  }

  // Toeplitz: bounded search over all monomials up to length 4.
  Graph toe = corpus("toeplitz");
  auto toe_basis = center_zero_basis(toe, q);
  AlgebraElement<RationalRing> toe_unit = identity_element(toe, q);
  c.expect(toe_basis.size() == 1 && equals(toe, toe_basis[0], toe_unit),
           "toeplitz: degree 0 is not span{1}");
  for (std::int64_t n = -3; n <= 3; ++n) {
    auto cands = lpa::testing::monomials_of_degree(toe, n, 4, q);
    std::size_t expected = n == 0 ? 1 : 0;
    c.expect(central_rank_within(toe, cands).central_rank == expected,
             "toeplitz: central rank in degree " + std::to_string(n));
    if (n != 0) c.expect(center_component_basis(toe, n, q).empty(), "toeplitz: nonzero degree");
  }
}

std::vector<Graph> corpus_and_random(std::uint32_t seed, int count) {
  std::vector<Graph> out;
  for (const auto& name : corpus_names()) out.push_back(corpus(name));
  std::mt19937 rng(seed);
  for (int i = 0; i < count; ++i) out.push_back(lpa::testing::random_graph(rng));
  return out;
}

// 4. Finite entries iff the closure of c^0 satisfies (F) with no breaking vertices.
void criterion_cycle_entries(Check& c) {
  std::size_t with_cycles = 0;
  for (const Graph& g : corpus_and_random(4004, 240)) {
    auto classes = cycles_without_exits(g);
    with_cycles += !classes.empty();
    for (const CycleClass& cc : classes) {
      VertexSet c0 = cc.vertices(g.vertex_count());
      VertexSet h = lpa::testing::oracle_closure(g, c0);
      bool rhs = lpa::testing::oracle_breaking(g, h).empty() && lpa::testing::oracle_condition_F(g, h);
      c.expect(has_finite_entries(g, cc) == rhs, "disagreement on\n" + serialize_graph(g));
      c.expect(finite_entries_via_closure(g, cc) == rhs, "closure check on\n" + serialize_graph(g));
    }
  }
  c.expect(with_cycles >= 50, "too few graphs with exit-free cycles");
}

// 5. Compact iff decompose succeeds; proper subsets of B_H are never compact.
void criterion_compactness(Check& c) {
  for (const Graph& g : corpus_and_random(5005, 240)) {
    for (const VertexSet& h : hereditary_saturated_sets(g)) {
      VertexSet b = breaking_vertices(g, h);
      AdmissiblePair pair{h, b};
      bool decomposes = true;
      try {
        decompose(g, pair);
      } catch (const InfiniteFamilyError&) {
        decomposes = false;
      }
      bool compact = is_compact_pair(g, pair);
      c.expect(compact == decomposes, "compact vs decompose on\n" + serialize_graph(g));
      c.expect(compact == lpa::testing::oracle_condition_F(g, h),
               "compact vs enumeration on\n" + serialize_graph(g));
      auto members = b.members();
      for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << members.size()); ++mask) {
        VertexSet s(g.vertex_count());
        for (std::size_t i = 0; i < members.size(); ++i) {
          if (mask >> i & 1) s.insert(members[i]);
        }
        c.expect(!is_compact_pair(g, AdmissiblePair{h, s}), "proper subset of B_H is compact");
      }
    }
  }
}

// 6. 1_U is the sum of the minimal indicators below U; minimal indicators are
// orthogonal idempotents.
void criterion_orthogonality(Check& c) {
  IntegerRing z;
  for (const Graph& g : corpus_and_random(6006, 120)) {
    auto minimal = minimal_compact_pairs(g);
    std::vector<AlgebraElement<IntegerRing>> ind;
    for (const auto& m : minimal) ind.push_back(indicator_of_pair(g, m, z));
    for (std::size_t i = 0; i < ind.size(); ++i) {
      for (std::size_t j = 0; j < ind.size(); ++j) {
        auto p = ind[i] * ind[j];
        c.expect(i == j ? equals(g, p, ind[i]) : is_zero(g, p),
                 "minimal indicator product on\n" + serialize_graph(g));
      }
    }
    for (const auto& pair : enumerate_compact_pairs(g)) {
      AlgebraElement<IntegerRing> sum(g, z);
      for (std::size_t i = 0; i < minimal.size(); ++i) {
        if (minimal[i].hereditary.is_subset_of(pair.hereditary)) sum += ind[i];
      }
      c.expect(equals(g, indicator_of_pair(g, pair, z), sum),
               "indicator is not the sum of minimal ones on\n" + serialize_graph(g));
    }
  }
}

// 7. pi transports products to convolution and preserves degree.
void criterion_transport(Check& c) {
  IntegerRing z;
  std::mt19937 rng(7007);
  for (const auto& name : corpus_names()) {
    Graph g = corpus(name);
    for (int i = 0; i < 500; ++i) {
      auto a = lpa::testing::random_element(g, z, rng);
      auto b = lpa::testing::random_element(g, z, rng);
      c.expect(equals(convolve(pi(g, a), pi(g, b)), pi(g, a * b)),
               name + ": " + to_text(g, a) + " * " + to_text(g, b));
      for (std::int64_t n : a.degrees()) {
        auto image = pi(g, a.degree_component(n));
        for (const auto& [t, coeff] : image.terms()) {
          c.expect(t.degree() == n, name + ": degree changed by pi");
        }
      }
    }
  }
}

// 8. Random nonzero rational combinations of a basis never vanish.
void criterion_independence(Check& c) {
  RationalRing q;
  std::mt19937 rng(8008);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (const auto& name : corpus_names()) {
    Graph g = corpus(name);
    auto basis = center_basis(g, q, 6);
    std::vector<std::vector<AlgebraElement<RationalRing>>> degrees{basis.zero_component};
    for (const auto& [n, xs] : basis.components) degrees.push_back(xs);
    for (const auto& xs : degrees) {
      if (xs.empty()) continue;
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> coeffs(xs.size());
        bool nonzero = false;
        while (!nonzero) {
          for (auto& k : coeffs) {
            k = Rational(num(rng), den(rng));
            nonzero = nonzero || k != 0;
          }
        }
        AlgebraElement<RationalRing> sum(g, q);
        for (std::size_t i = 0; i < xs.size(); ++i) sum += xs[i].scaled(coeffs[i]);
        c.expect(!is_zero(g, sum), name + ": vanishing combination " + to_text(g, sum));
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"centrality over Z, Q, Z/4 for |n| <= 6", criterion_centrality},
      {"brute-force center dimension on acyclic graphs", criterion_bruteforce},
      {"closed forms for loop, A3 and Toeplitz", criterion_closed_forms},
      {"finite entries vs closure condition", criterion_cycle_entries},
      {"compactness coherence", criterion_compactness},
      {"orthogonality and partition of indicators", criterion_orthogonality},
      {"transport of products to convolution", criterion_transport},
      {"linear independence in every degree", criterion_independence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = error.empty() && c.failed == 0;
    failures += !ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << "  ("
              << c.checked << " checks, " << timing << ")" << std::endl;
    if (!error.empty()) std::cout << "      exception: " << error << "\n";
    for (const auto& note : c.notes) std::cout << "      " << note << "\n";
  }
  return failures == 0 ? 0 : 1;
}
