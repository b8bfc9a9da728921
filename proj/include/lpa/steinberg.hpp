#ifndef LPA_STEINBERG_HPP
#define LPA_STEINBERG_HPP

// The Steinberg algebra model of L_R(E): elements are R-combinations of
// indicator functions of basic compact open bisections Z((mu,nu) \ F) of the
// graph groupoid. Equality in L_R(E) is decided here.
//
// Normal form. Z(mu1,nu1) and Z(mu2,nu2) meet only if (mu2,nu2) extends
// (mu1,nu1) by a common path delta, or the other way round. Stripping the
// longest common final segment of mu and nu therefore gives a root pair,
// and bisections with different roots are disjoint. Below one root a
// bisection is a basic set Z(delta \ F) of the boundary paths leaving the
// root's range, so every group is a finite trie of paths. Each trie node p
// owns the atom Z(p \ children(p)), on which every input indicator is
// constant. Atoms are pairwise disjoint and nonempty unless p ends at a
// regular vertex all of whose edges are children, so an element vanishes
// iff every nonempty atom carries a zero coefficient.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/errors.hpp"
#include "lpa/graph.hpp"
#include "lpa/invariant_lattice.hpp"
#include "lpa/ring.hpp"

namespace lpa {

// Z((mu,nu) \ F); F is a sorted set of edges leaving r(mu).
struct BasicBisection {
  Path mu;
  Path nu;
  std::vector<EdgeRef> exclusions;

  std::int64_t degree() const {
    return static_cast<std::int64_t>(mu.length()) - static_cast<std::int64_t>(nu.length());
  }

  bool operator==(const BasicBisection&) const = default;
  auto operator<=>(const BasicBisection&) const = default;
};

inline bool is_empty_bisection(const Graph& g, const BasicBisection& b) {
  return g.kind(b.mu.range) == VertexKind::Regular &&
         Count(b.exclusions.size()) == g.out_degree(b.mu.range);
}

template <Ring R>
class SteinbergElement {
 public:
  using coefficient = typename R::value_type;
  using term_map = std::map<BasicBisection, coefficient>;

  SteinbergElement() = default;
  explicit SteinbergElement(const Graph& g, R ring = R{}) : graph_(&g), ring_(std::move(ring)) {}

  const Graph* graph() const noexcept { return graph_; }
  const R& ring() const noexcept { return ring_; }
  const term_map& terms() const noexcept { return terms_; }

  void add_term(BasicBisection b, const coefficient& c) {
    if (b.mu.range != b.nu.range) throw ContractError("bisection with r(mu) != r(nu)");
    std::sort(b.exclusions.begin(), b.exclusions.end());
    b.exclusions.erase(std::unique(b.exclusions.begin(), b.exclusions.end()), b.exclusions.end());
    if (graph_) {
      for (EdgeRef e : b.exclusions) {
        if (graph_->source(e) != b.mu.range) {
          throw ContractError("bisection exclusion does not leave r(mu)");
        }
      }
      if (is_empty_bisection(*graph_, b)) return;
    }
    if (ring_.is_zero(c)) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(std::move(b), c);
      return;
    }
    it->second = ring_.add(it->second, c);
    if (ring_.is_zero(it->second)) terms_.erase(it);
  }

  SteinbergElement& operator+=(const SteinbergElement& o) {
    check_compatible(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
  }
  SteinbergElement& operator-=(const SteinbergElement& o) {
    check_compatible(o);
    for (const auto& [b, c] : o.terms_) add_term(b, ring_.neg(c));
    return *this;
  }
  friend SteinbergElement operator+(SteinbergElement a, const SteinbergElement& b) {
    return a += b;
  }
  friend SteinbergElement operator-(SteinbergElement a, const SteinbergElement& b) {
    return a -= b;
  }

  SteinbergElement scaled(const coefficient& s) const {
    SteinbergElement out(*graph_, ring_);
    for (const auto& [b, c] : terms_) out.add_term(b, ring_.mul(s, c));
    return out;
  }

 private:
  void check_compatible(const SteinbergElement& o) const {
    if (graph_ != o.graph_) throw ContractError("operands belong to different graphs");
    if (!(ring_ == o.ring_)) throw ContractError("operands have different coefficient rings");
  }

  const Graph* graph_ = nullptr;
  R ring_{};
  term_map terms_;
};

namespace detail {

struct RootSplit {
  Path mu_root;
  Path nu_root;
  Path delta;  // from r(root) to r(mu)
};

inline RootSplit split_root(const Graph& g, const Path& mu, const Path& nu) {
  std::size_t common = 0;
  while (common < mu.length() && common < nu.length() &&
         mu.edges[mu.length() - 1 - common] == nu.edges[nu.length() - 1 - common]) {
    ++common;
  }
  auto head = [&](const Path& p) {
    Path h = p;
    h.edges.resize(p.length() - common);
    if (common > 0) h.range = g.source(p.edges[p.length() - common]);
    return h;
  };
  RootSplit s{head(mu), head(nu), {}};
  s.delta = remainder(mu, s.mu_root);
  return s;
}

template <class Coefficient>
struct LocalTerm {
  Path delta;
  std::vector<EdgeRef> exclusions;
  std::size_t tag;
  Coefficient coefficient;
};

template <class Coefficient>
struct Atom {
  BasicBisection bisection;
  std::vector<Coefficient> values;  // one per tag
};

// Common refinement of a tagged family of weighted bisections. Returns the
// nonempty atoms on which some tag has a nonzero value.
template <Ring R>
std::vector<Atom<typename R::value_type>> refine(
    const Graph& g, const R& ring,
    const std::vector<std::pair<std::size_t, const SteinbergElement<R>*>>& family,
    std::size_t tags) {
  using C = typename R::value_type;
  std::map<std::pair<Path, Path>, std::vector<LocalTerm<C>>> groups;
  for (const auto& [tag, elem] : family) {
    for (const auto& [b, c] : elem->terms()) {
      RootSplit s = split_root(g, b.mu, b.nu);
      groups[{s.mu_root, s.nu_root}].push_back({s.delta, b.exclusions, tag, c});
    }
  }

  std::vector<Atom<C>> atoms;
  for (const auto& [root, locals] : groups) {
    std::set<Path> nodes;
    for (const auto& t : locals) {
      Path p = Path::at(t.delta.source);
      nodes.insert(p);
      for (EdgeRef e : t.delta.edges) {
        p = p.then(e, g.range(e));
        nodes.insert(p);
      }
      for (EdgeRef e : t.exclusions) nodes.insert(t.delta.then(e, g.range(e)));
    }
    std::map<Path, std::vector<EdgeRef>> children;
    for (const Path& p : nodes) {
      if (p.is_vertex()) continue;
      Path parent = p;
      parent.edges.pop_back();
      parent.range = g.source(p.edges.back());
      children[parent].push_back(p.edges.back());
    }
    for (const Path& p : nodes) {
      std::vector<EdgeRef> kids = children[p];
      std::sort(kids.begin(), kids.end());
      if (g.kind(p.range) == VertexKind::Regular && Count(kids.size()) == g.out_degree(p.range)) {
        continue;
      }
      std::vector<C> values(tags, ring.zero());
      bool any = false;
      for (const auto& t : locals) {
        if (!is_prefix(t.delta, p)) continue;
        if (t.delta.length() < p.length()) {
          EdgeRef next = p.edges[t.delta.length()];
          if (std::find(t.exclusions.begin(), t.exclusions.end(), next) != t.exclusions.end()) {
            continue;
          }
        }
        values[t.tag] = ring.add(values[t.tag], t.coefficient);
      }
      for (const C& v : values) any = any || !ring.is_zero(v);
      if (!any) continue;
      atoms.push_back({BasicBisection{concat(root.first, p), concat(root.second, p), kids},
                       std::move(values)});
    }
  }
  return atoms;
}

}  // namespace detail

// Disjoint-support form of s.
template <Ring R>
SteinbergElement<R> normalize(const SteinbergElement<R>& s) {
  if (!s.graph()) return s;
  SteinbergElement<R> out(*s.graph(), s.ring());
  for (auto& atom : detail::refine(*s.graph(), s.ring(), {{0, &s}}, 1)) {
    out.add_term(std::move(atom.bisection), atom.values[0]);
  }
  return out;
}

template <Ring R>
bool is_zero(const SteinbergElement<R>& s) {
  return normalize(s).terms().empty();
}

template <Ring R>
bool equals(const SteinbergElement<R>& a, const SteinbergElement<R>& b) {
  return is_zero(a - b);
}

// Coordinates of a finite family in a common refinement: row i holds the
// values of family[i] on each atom. Two combinations of the family agree iff
// their coordinate combinations agree.
template <Ring R>
std::vector<std::vector<typename R::value_type>> joint_coordinates(
    const Graph& g, const R& ring, const std::vector<SteinbergElement<R>>& family) {
  std::vector<std::pair<std::size_t, const SteinbergElement<R>*>> tagged;
  for (std::size_t i = 0; i < family.size(); ++i) tagged.push_back({i, &family[i]});
  auto atoms = detail::refine(g, ring, tagged, family.size());
  std::vector<std::vector<typename R::value_type>> rows(
      family.size(), std::vector<typename R::value_type>(atoms.size(), ring.zero()));
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    for (std::size_t i = 0; i < family.size(); ++i) rows[i][a] = atoms[a].values[i];
  }
  return rows;
}

// Monomial alpha beta^* maps to the indicator of Z(alpha, beta).
template <Ring R>
SteinbergElement<R> pi_raw(const Graph& g, const AlgebraElement<R>& a) {
  if (a.graph() && a.graph() != &g) throw ContractError("element belongs to another graph");
  SteinbergElement<R> s(g, a.ring());
  for (const auto& [m, c] : a.terms()) s.add_term({m.alpha, m.beta, {}}, c);
  return s;
}

template <Ring R>
SteinbergElement<R> pi(const Graph& g, const AlgebraElement<R>& a) {
  return normalize(pi_raw(g, a));
}

// Inverse of pi on basic bisections: mu nu^* - sum_{e in F} mu e e^* nu^*.
template <Ring R>
AlgebraElement<R> to_algebra(const SteinbergElement<R>& s) {
  const Graph& g = *s.graph();
  const R& ring = s.ring();
  AlgebraElement<R> a(g, ring);
  for (const auto& [b, c] : s.terms()) {
    a.add_term(Monomial{b.mu, b.nu}, c);
    for (EdgeRef e : b.exclusions) {
      a.add_term(Monomial{g.extend(b.mu, e), g.extend(b.nu, e)}, ring.neg(c));
    }
  }
  return a;
}

// Z((mu1,nu1) \ F1) Z((mu2,nu2) \ F2), itself a basic bisection or empty.
inline std::optional<BasicBisection> bisection_product(const Graph& g, const BasicBisection& x,
                                                       const BasicBisection& y) {
  auto excluded = [](const std::vector<EdgeRef>& f, EdgeRef e) {
    return std::find(f.begin(), f.end(), e) != f.end();
  };
  std::optional<BasicBisection> out;
  if (is_prefix(x.nu, y.mu)) {
    Path gamma = remainder(y.mu, x.nu);
    if (gamma.is_vertex()) {
      std::vector<EdgeRef> f = x.exclusions;
      f.insert(f.end(), y.exclusions.begin(), y.exclusions.end());
      std::sort(f.begin(), f.end());
      f.erase(std::unique(f.begin(), f.end()), f.end());
      out = BasicBisection{x.mu, y.nu, std::move(f)};
    } else if (!excluded(x.exclusions, gamma.edges.front())) {
      out = BasicBisection{concat(x.mu, gamma), y.nu, y.exclusions};
    }
  } else if (is_prefix(y.mu, x.nu)) {
    Path delta = remainder(x.nu, y.mu);
    if (!excluded(y.exclusions, delta.edges.front())) {
      out = BasicBisection{x.mu, concat(y.nu, delta), x.exclusions};
    }
  }
  if (out && is_empty_bisection(g, *out)) out.reset();
  return out;
}

template <Ring R>
SteinbergElement<R> convolve(const SteinbergElement<R>& s, const SteinbergElement<R>& t) {
  if (s.graph() != t.graph() || !s.graph()) throw ContractError("convolve: graph mismatch");
  const Graph& g = *s.graph();
  SteinbergElement<R> out(g, s.ring());
  for (const auto& [b1, c1] : s.terms()) {
    for (const auto& [b2, c2] : t.terms()) {
      if (auto b = bisection_product(g, b1, b2)) out.add_term(*b, s.ring().mul(c1, c2));
    }
  }
  return normalize(out);
}

template <Ring R>
bool is_zero(const Graph& g, const AlgebraElement<R>& a) {
  return is_zero(pi_raw(g, a));
}

template <Ring R>
bool equals(const Graph& g, const AlgebraElement<R>& a, const AlgebraElement<R>& b) {
  return is_zero(g, a - b);
}

// First generator that fails to commute with a, if any.
template <Ring R>
std::optional<Generator> find_noncommuting_generator(const Graph& g, const AlgebraElement<R>& a,
                                                     std::uint64_t fresh_offset = 0) {
  for (const Generator& x : generators(g, a, fresh_offset)) {
    auto xe = x.element(g, a.ring());
    if (!is_zero(g, a * xe - xe * a)) return x;
  }
  return std::nullopt;
}

template <Ring R>
bool is_central(const Graph& g, const AlgebraElement<R>& a) {
  return !find_noncommuting_generator(g, a).has_value();
}

// Algebra element whose image under pi is the indicator of the union of the
// pieces.
template <Ring R>
AlgebraElement<R> indicator_of_decomposition(const Graph& g, const Decomposition& d,
                                             R ring = R{}) {
  AlgebraElement<R> a(g, ring);
  for (const UnitBasicSet& piece : d.pieces) {
    a.add_term(Monomial{piece.path, piece.path}, ring.one());
    for (EdgeRef e : piece.exclusions) {
      Path pe = g.extend(piece.path, e);
      a.add_term(Monomial{pe, pe}, ring.neg(ring.one()));
    }
  }
  return a;
}

// sum_{v in H} v + sum_{alpha in F'_E(H)} alpha alpha^*
//   + sum_{r(alpha) in B_H} (alpha alpha^* - sum_{e in F_alpha} alpha e e^* alpha^*)
template <Ring R>
AlgebraElement<R> indicator_of_pair(const Graph& g, const AdmissiblePair& pair, R ring = R{}) {
  if (!is_compact_pair(g, pair)) {
    // decompose names the infinite family when there is one.
    decompose(g, pair);
    throw ContractError("indicator_of_pair: pair is not compact");
  }
  return indicator_of_decomposition(g, decompose(g, pair), ring);
}

}  // namespace lpa

#endif  // LPA_STEINBERG_HPP
