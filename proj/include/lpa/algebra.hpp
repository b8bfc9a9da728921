#ifndef LPA_ALGEBRA_HPP
#define LPA_ALGEBRA_HPP

// Symbolic Leavitt path algebra: finite R-linear combinations of monomials
// alpha beta^* with r(alpha) = r(beta). Monomials are kept unreduced; the
// span is not a basis because of the (CK2) relation, and equality is decided
// in the Steinberg model (steinberg.hpp).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lpa/errors.hpp"
#include "lpa/graph.hpp"
#include "lpa/ring.hpp"

namespace lpa {

struct Monomial {
  Path alpha;
  Path beta;

  static Monomial vertex(VertexId v) { return {Path::at(v), Path::at(v)}; }

  std::int64_t degree() const {
    return static_cast<std::int64_t>(alpha.length()) - static_cast<std::int64_t>(beta.length());
  }

  Monomial adjoint() const { return {beta, alpha}; }

  auto operator<=>(const Monomial&) const = default;
};

// (a1 b1^*)(a2 b2^*) by (CK1): nonzero only when one of b1, a2 extends the
// other.
inline std::optional<Monomial> mono_mul(const Monomial& m1, const Monomial& m2) {
  if (is_prefix(m1.beta, m2.alpha)) {
    return Monomial{concat(m1.alpha, remainder(m2.alpha, m1.beta)), m2.beta};
  }
  if (is_prefix(m2.alpha, m1.beta)) {
    return Monomial{m1.alpha, concat(m2.beta, remainder(m1.beta, m2.alpha))};
  }
  return std::nullopt;
}

template <Ring R>
class AlgebraElement {
 public:
  using coefficient = typename R::value_type;
  using term_map = std::map<Monomial, coefficient>;

  AlgebraElement() = default;
  explicit AlgebraElement(const Graph& g, R ring = R{}) : graph_(&g), ring_(std::move(ring)) {}

  const Graph* graph() const noexcept { return graph_; }
  const R& ring() const noexcept { return ring_; }
  const term_map& terms() const noexcept { return terms_; }
  // No stored terms. Elements with terms may still vanish in the algebra.
  bool has_no_terms() const noexcept { return terms_.empty(); }

  void add_term(const Monomial& m, const coefficient& c) {
    if (m.alpha.range != m.beta.range) {
      throw ContractError("monomial with r(alpha) != r(beta)");
    }
    if (graph_ && !(graph_->is_path(m.alpha) && graph_->is_path(m.beta))) {
      throw ContractError("monomial is not made of paths of the graph");
    }
    if (ring_.is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
      return;
    }
    it->second = ring_.add(it->second, c);
    if (ring_.is_zero(it->second)) terms_.erase(it);
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  AlgebraElement& operator-=(const AlgebraElement& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, ring_.neg(c));
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

  AlgebraElement operator-() const { return scaled(ring_.neg(ring_.one())); }

  AlgebraElement scaled(const coefficient& s) const {
    AlgebraElement out = empty_like();
    for (const auto& [m, c] : terms_) out.add_term(m, ring_.mul(s, c));
    return out;
  }

  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out = a.empty_like();
    out.adopt(b);
    for (const auto& [m1, c1] : a.terms_) {
      for (const auto& [m2, c2] : b.terms_) {
        if (auto m = mono_mul(m1, m2)) out.add_term(*m, out.ring_.mul(c1, c2));
      }
    }
    return out;
  }

  // alpha beta^* -> beta alpha^*, coefficients fixed (R is commutative).
  AlgebraElement involution() const {
    AlgebraElement out = empty_like();
    for (const auto& [m, c] : terms_) out.add_term(m.adjoint(), c);
    return out;
  }

  AlgebraElement degree_component(std::int64_t n) const {
    AlgebraElement out = empty_like();
    for (const auto& [m, c] : terms_) {
      if (m.degree() == n) out.add_term(m, c);
    }
    return out;
  }

  std::set<std::int64_t> degrees() const {
    std::set<std::int64_t> out;
    for (const auto& [m, c] : terms_) out.insert(m.degree());
    return out;
  }

  // Structural equality of the stored terms, not equality in L_R(E).
  bool same_terms(const AlgebraElement& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [m, c] : terms_) {
      if (!(m == it->first) || !ring_.equal(c, it->second)) return false;
      ++it;
    }
    return true;
  }

 private:
  AlgebraElement empty_like() const {
    AlgebraElement out;
    out.graph_ = graph_;
    out.ring_ = ring_;
    return out;
  }

  void adopt(const AlgebraElement& o) {
    if (graph_ && o.graph_ && graph_ != o.graph_) {
      throw ContractError("operands belong to different graphs");
    }
    if (!graph_) graph_ = o.graph_;
    if (!(ring_ == o.ring_)) {
      if (terms_.empty() && !graph_) {
        ring_ = o.ring_;
      } else if (!o.terms_.empty()) {
        throw ContractError("operands have different coefficient rings");
      }
    }
  }

  const Graph* graph_ = nullptr;
  R ring_{};
  term_map terms_;
};

template <Ring R>
AlgebraElement<R> monomial_element(const Graph& g, const Monomial& m, R ring = R{}) {
  AlgebraElement<R> a(g, ring);
  a.add_term(m, ring.one());
  return a;
}

template <Ring R>
AlgebraElement<R> vertex_element(const Graph& g, VertexId v, R ring = R{}) {
  return monomial_element(g, Monomial::vertex(v), ring);
}

template <Ring R>
AlgebraElement<R> edge_element(const Graph& g, EdgeRef e, R ring = R{}) {
  return monomial_element(g, Monomial{g.edge_path(e), Path::at(g.range(e))}, ring);
}

template <Ring R>
AlgebraElement<R> ghost_element(const Graph& g, EdgeRef e, R ring = R{}) {
  return monomial_element(g, Monomial{Path::at(g.range(e)), g.edge_path(e)}, ring);
}

// alpha alpha^*
template <Ring R>
AlgebraElement<R> projection_element(const Graph& g, const Path& alpha, R ring = R{}) {
  return monomial_element(g, Monomial{alpha, alpha}, ring);
}

// Sum of all vertices: the identity of L_R(E) for a finite vertex set.
template <Ring R>
AlgebraElement<R> identity_element(const Graph& g, R ring = R{}) {
  AlgebraElement<R> a(g, ring);
  for (VertexId v = 0; v < g.vertex_count(); ++v) a.add_term(Monomial::vertex(v), ring.one());
  return a;
}

// The right-hand side of (CK2) at a regular vertex: sum of e e^*.
template <Ring R>
AlgebraElement<R> ck2_expand(const Graph& g, VertexId v, R ring = R{}) {
  if (v >= g.vertex_count()) throw InputError("unknown vertex id");
  if (g.kind(v) != VertexKind::Regular) {
    throw ContractError("ck2_expand: '" + g.vertex_name(v) + "' is not a regular vertex");
  }
  AlgebraElement<R> a(g, ring);
  for (EdgeRef e : g.out_edges(v)) a.add_term(Monomial{g.edge_path(e), g.edge_path(e)}, ring.one());
  return a;
}

struct Generator {
  enum class Kind { Vertex, Edge, Ghost };
  Kind kind = Kind::Vertex;
  VertexId vertex = 0;
  EdgeRef edge{};

  Monomial monomial(const Graph& g) const {
    switch (kind) {
      case Kind::Vertex: return Monomial::vertex(vertex);
      case Kind::Edge: return Monomial{g.edge_path(edge), Path::at(g.range(edge))};
      case Kind::Ghost: return Monomial{Path::at(g.range(edge)), g.edge_path(edge)};
    }
    return {};
  }

  template <Ring R>
  AlgebraElement<R> element(const Graph& g, R ring = R{}) const {
    return monomial_element(g, monomial(g), ring);
  }

  bool operator==(const Generator&) const = default;
};

// Indices of each omega bundle occurring in the element.
template <Ring R>
std::map<BundleId, std::set<std::uint64_t>> omega_indices_used(const Graph& g,
                                                               const AlgebraElement<R>& a) {
  std::map<BundleId, std::set<std::uint64_t>> used;
  for (const auto& [m, c] : a.terms()) {
    for (const Path* p : {&m.alpha, &m.beta}) {
      for (EdgeRef e : p->edges) {
        if (g.bundle(e.bundle).multiplicity.is_omega()) used[e.bundle].insert(e.index);
      }
    }
  }
  return used;
}

inline std::uint64_t least_unused(const std::set<std::uint64_t>& used) {
  std::uint64_t i = 0;
  while (used.count(i)) ++i;
  return i;
}

// A finite set of generators that decides centrality of `a`: all vertices,
// every edge and ghost of finite bundles, and for each omega bundle the
// indices occurring in `a` plus the least unused index. `fresh_offset`
// skips that many unused indices (used to check fresh indices agree).
template <Ring R>
std::vector<Generator> generators(const Graph& g, const AlgebraElement<R>& a,
                                  std::uint64_t fresh_offset = 0) {
  std::vector<Generator> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back({Generator::Kind::Vertex, v, {}});
  auto used = omega_indices_used(g, a);
  for (BundleId b = 0; b < g.bundle_count(); ++b) {
    std::vector<EdgeRef> edges;
    if (g.bundle(b).multiplicity.is_omega()) {
      std::set<std::uint64_t> idx = used[b];
      std::set<std::uint64_t> taken = idx;
      std::uint64_t fresh = least_unused(taken);
      for (std::uint64_t k = 0; k < fresh_offset; ++k) {
        taken.insert(fresh);
        fresh = least_unused(taken);
      }
      idx.insert(fresh);
      for (std::uint64_t i : idx) edges.push_back({b, i});
    } else {
      edges = g.edges_of(b);
    }
    for (EdgeRef e : edges) {
      out.push_back({Generator::Kind::Edge, g.source(e), e});
      out.push_back({Generator::Kind::Ghost, g.range(e), e});
    }
  }
  return out;
}

// Text form: coefficient, real edges of alpha, then "(beta)^*"; a vertex
// monomial prints the vertex name.
inline std::string format_monomial(const Graph& g, const Monomial& m) {
  auto edges = [&](const Path& p) {
    std::string s;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if (i) s += ' ';
      s += g.edge_name(p.edges[i]);
    }
    return s;
  };
  if (m.alpha.is_vertex() && m.beta.is_vertex()) return g.vertex_name(m.alpha.source);
  std::string s = edges(m.alpha);
  if (!m.beta.is_vertex()) {
    if (!s.empty()) s += ' ';
    s += "(" + edges(m.beta) + ")^*";
  }
  return s;
}

template <Ring R>
std::string to_text(const Graph& g, const AlgebraElement<R>& a) {
  if (a.terms().empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    std::string coeff = a.ring().format(c);
    if (!first && coeff.front() == '-') {
      s += " - ";
      coeff.erase(0, 1);
    } else if (!first) {
      s += " + ";
    }
    first = false;
    s += coeff + " " + format_monomial(g, m);
  }
  return s;
}

}  // namespace lpa

#endif  // LPA_ALGEBRA_HPP
