#ifndef LPA_GRAPH_HPP
#define LPA_GRAPH_HPP

// Finite presentation of directed graphs whose vertices may emit infinitely
// many edges. Edges come in named bundles; a bundle of multiplicity omega
// stands for countably many parallel edges b[0], b[1], ...

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lpa/count.hpp"
#include "lpa/errors.hpp"

namespace lpa {

using VertexId = std::uint32_t;
using BundleId = std::uint32_t;

struct Bundle {
  std::string name;
  VertexId source = 0;
  VertexId range = 0;
  Multiplicity multiplicity = Multiplicity::finite(1);
};

// A single edge: the index-th parallel edge of a bundle.
struct EdgeRef {
  BundleId bundle = 0;
  std::uint64_t index = 0;

  auto operator<=>(const EdgeRef&) const = default;
};

// A finite path. Length-0 paths are vertices (source == range, no edges).
// The range is cached so that path algebra needs no graph lookups.
struct Path {
  VertexId source = 0;
  std::vector<EdgeRef> edges;
  VertexId range = 0;

  static Path at(VertexId v) { return Path{v, {}, v}; }

  std::size_t length() const noexcept { return edges.size(); }
  bool is_vertex() const noexcept { return edges.empty(); }

  // Appends one edge whose source must be `range`; `edge_range` is r(e).
  Path then(EdgeRef e, VertexId edge_range) const {
    Path p = *this;
    p.edges.push_back(e);
    p.range = edge_range;
    return p;
  }

  auto operator<=>(const Path&) const = default;
};

inline Path concat(const Path& a, const Path& b) {
  if (a.range != b.source) throw ContractError("concat: paths do not compose");
  Path p = a;
  p.edges.insert(p.edges.end(), b.edges.begin(), b.edges.end());
  p.range = b.range;
  return p;
}

inline bool is_prefix(const Path& prefix, const Path& p) {
  if (prefix.source != p.source || prefix.length() > p.length()) return false;
  if (!std::equal(prefix.edges.begin(), prefix.edges.end(), p.edges.begin())) {
    return false;
  }
  return prefix.length() < p.length() || prefix.range == p.range;
}

// p with `prefix` removed; requires is_prefix(prefix, p).
inline Path remainder(const Path& p, const Path& prefix) {
  Path rest;
  rest.source = prefix.range;
  rest.edges.assign(p.edges.begin() + static_cast<std::ptrdiff_t>(prefix.length()),
                    p.edges.end());
  rest.range = p.range;
  return rest;
}

enum class VertexKind { Sink, InfiniteEmitter, Regular };

inline std::string_view to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Sink: return "sink";
    case VertexKind::InfiniteEmitter: return "infinite-emitter";
    case VertexKind::Regular: return "regular";
  }
  return "?";
}

// Subset of the vertices of one graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, false) {}

  static VertexSet all(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.bits_.begin(), s.bits_.end(), true);
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  bool contains(VertexId v) const { return v < bits_.size() && bits_[v]; }
  void insert(VertexId v) { bits_.at(v) = true; }
  void erase(VertexId v) { bits_.at(v) = false; }

  std::size_t size() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
  }
  bool empty() const { return size() == 0; }

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < bits_.size(); ++v) {
      if (bits_[v]) out.push_back(v);
    }
    return out;
  }

  bool is_subset_of(const VertexSet& other) const {
    for (VertexId v = 0; v < bits_.size(); ++v) {
      if (bits_[v] && !other.contains(v)) return false;
    }
    return true;
  }

  VertexSet complement() const {
    VertexSet s = *this;
    s.bits_.flip();
    return s;
  }

  VertexSet united(const VertexSet& other) const {
    VertexSet s = *this;
    for (VertexId v = 0; v < other.universe(); ++v) {
      if (other.contains(v)) s.insert(v);
    }
    return s;
  }

  bool intersects(const VertexSet& other) const {
    for (VertexId v = 0; v < bits_.size(); ++v) {
      if (bits_[v] && other.contains(v)) return true;
    }
    return false;
  }

  bool operator==(const VertexSet&) const = default;

  // Order by cardinality, then lexicographically by sorted members.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    auto sa = a.size();
    auto sb = b.size();
    if (sa != sb) return sa < sb;
    return a.members() < b.members();
  }

 private:
  std::vector<bool> bits_;
};

// Immutable finitely presented graph.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<std::string> vertex_names, std::vector<Bundle> bundles)
      : vertex_names_(std::move(vertex_names)), bundles_(std::move(bundles)) {
    for (VertexId v = 0; v < vertex_names_.size(); ++v) {
      if (!names_.emplace(vertex_names_[v], v).second) {
        throw InputError("duplicate name '" + vertex_names_[v] + "'");
      }
    }
    out_.resize(vertex_names_.size());
    for (BundleId b = 0; b < bundles_.size(); ++b) {
      const Bundle& bd = bundles_[b];
      if (bd.source >= vertex_names_.size() || bd.range >= vertex_names_.size()) {
        throw InputError("bundle '" + bd.name + "' has an undeclared endpoint");
      }
      if (names_.count(bd.name) || bundle_names_.count(bd.name)) {
        throw InputError("duplicate name '" + bd.name + "'");
      }
      bundle_names_.emplace(bd.name, b);
      out_[bd.source].push_back(b);
    }
  }

  std::size_t vertex_count() const noexcept { return vertex_names_.size(); }
  std::size_t bundle_count() const noexcept { return bundles_.size(); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const Bundle& bundle(BundleId b) const { return bundles_.at(b); }
  std::span<const Bundle> bundles() const noexcept { return bundles_; }

  std::optional<VertexId> find_vertex(std::string_view name) const {
    auto it = names_.find(std::string(name));
    if (it == names_.end()) return std::nullopt;
    return it->second;
  }

  VertexId vertex(std::string_view name) const {
    if (auto v = find_vertex(name)) return *v;
    throw InputError("unknown vertex '" + std::string(name) + "'");
  }

  std::optional<BundleId> find_bundle(std::string_view name) const {
    auto it = bundle_names_.find(std::string(name));
    if (it == bundle_names_.end()) return std::nullopt;
    return it->second;
  }

  BundleId bundle_id(std::string_view name) const {
    if (auto b = find_bundle(name)) return *b;
    throw InputError("unknown bundle '" + std::string(name) + "'");
  }

  VertexSet vertex_set(std::initializer_list<std::string_view> names) const {
    VertexSet s(vertex_count());
    for (auto n : names) s.insert(vertex(n));
    return s;
  }

  std::span<const BundleId> out_bundles(VertexId v) const { return out_.at(v); }

  Count out_degree(VertexId v) const {
    Count c = 0;
    for (BundleId b : out_bundles(v)) c += to_count(bundles_[b].multiplicity);
    return c;
  }

  VertexKind kind(VertexId v) const {
    if (out_.at(v).empty()) return VertexKind::Sink;
    return out_degree(v).is_infinite() ? VertexKind::InfiniteEmitter
                                       : VertexKind::Regular;
  }

  bool contains(EdgeRef e) const {
    if (e.bundle >= bundles_.size()) return false;
    const auto& m = bundles_[e.bundle].multiplicity;
    return m.is_omega() || e.index < m.value();
  }

  VertexId source(EdgeRef e) const { return checked(e).source; }
  VertexId range(EdgeRef e) const { return checked(e).range; }

  // Edges of bundle b in index order; an omega bundle must not be expanded.
  std::vector<EdgeRef> edges_of(BundleId b) const {
    const Bundle& bd = bundles_.at(b);
    if (bd.multiplicity.is_omega()) {
      throw ContractError("cannot enumerate omega bundle '" + bd.name + "'");
    }
    std::vector<EdgeRef> out;
    for (std::uint64_t i = 0; i < bd.multiplicity.value(); ++i) out.push_back({b, i});
    return out;
  }

  // All outgoing edges of a vertex that emits finitely many edges.
  std::vector<EdgeRef> out_edges(VertexId v) const {
    std::vector<EdgeRef> out;
    for (BundleId b : out_bundles(v)) {
      auto es = edges_of(b);
      out.insert(out.end(), es.begin(), es.end());
    }
    return out;
  }

  // "c" for a single-edge bundle, "b[3]" otherwise.
  std::string edge_name(EdgeRef e) const {
    const Bundle& bd = checked(e);
    if (!bd.multiplicity.is_omega() && bd.multiplicity.value() == 1) return bd.name;
    return bd.name + "[" + std::to_string(e.index) + "]";
  }

  Path edge_path(EdgeRef e) const {
    const Bundle& bd = checked(e);
    return Path{bd.source, {e}, bd.range};
  }

  Path extend(const Path& p, EdgeRef e) const {
    if (source(e) != p.range) throw ContractError("extend: edge does not start at path range");
    return p.then(e, range(e));
  }

  bool is_path(const Path& p) const {
    if (p.source >= vertex_count() || p.range >= vertex_count()) return false;
    VertexId at = p.source;
    for (EdgeRef e : p.edges) {
      if (!contains(e) || bundles_[e.bundle].source != at) return false;
      at = bundles_[e.bundle].range;
    }
    return at == p.range;
  }

  bool operator==(const Graph& other) const {
    if (vertex_names_ != other.vertex_names_ || bundles_.size() != other.bundles_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < bundles_.size(); ++i) {
      const auto& a = bundles_[i];
      const auto& b = other.bundles_[i];
      if (a.name != b.name || a.source != b.source || a.range != b.range ||
          !(a.multiplicity == b.multiplicity)) {
        return false;
      }
    }
    return true;
  }

 private:
  const Bundle& checked(EdgeRef e) const {
    if (!contains(e)) throw InputError("edge reference out of range");
    return bundles_[e.bundle];
  }

  std::vector<std::string> vertex_names_;
  std::vector<Bundle> bundles_;
  std::vector<std::vector<BundleId>> out_;
  std::unordered_map<std::string, VertexId> names_;
  std::unordered_map<std::string, BundleId> bundle_names_;
};

inline VertexKind classify_vertex(const Graph& g, VertexId v) {
  if (v >= g.vertex_count()) throw InputError("unknown vertex id " + std::to_string(v));
  return g.kind(v);
}

inline VertexKind classify_vertex(const Graph& g, std::string_view name) {
  return g.kind(g.vertex(name));
}

// Vertices reachable from `from` by paths of length >= 0.
inline VertexSet forward_closure(const Graph& g, const VertexSet& from) {
  VertexSet seen = from;
  std::deque<VertexId> queue;
  for (VertexId v : from.members()) queue.push_back(v);
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (BundleId b : g.out_bundles(v)) {
      VertexId r = g.bundle(b).range;
      if (!seen.contains(r)) {
        seen.insert(r);
        queue.push_back(r);
      }
    }
  }
  return seen;
}

inline bool reaches(const Graph& g, VertexId v, const VertexSet& targets) {
  if (v >= g.vertex_count()) throw InputError("unknown vertex id " + std::to_string(v));
  VertexSet start(g.vertex_count());
  start.insert(v);
  return forward_closure(g, start).intersects(targets);
}

// Simple cycles, one per base vertex: a cycle based at v visits no vertex
// twice except v at both ends. Ordered by base vertex, then edge sequence.
// Omega bundles contribute only their index-0 edge.
inline std::vector<Path> simple_cycles(const Graph& g) {
  std::vector<Path> out;
  const std::size_t n = g.vertex_count();
  for (VertexId base = 0; base < n; ++base) {
    std::vector<bool> on_path(n, false);
    on_path[base] = true;
    Path current = Path::at(base);
    auto dfs = [&](auto&& self, VertexId at) -> void {
      for (BundleId b : g.out_bundles(at)) {
        const Bundle& bd = g.bundle(b);
        std::uint64_t copies = bd.multiplicity.is_omega() ? 1 : bd.multiplicity.value();
        for (std::uint64_t i = 0; i < copies; ++i) {
          if (bd.range == base) {
            out.push_back(current.then({b, i}, base));
          } else if (!on_path[bd.range]) {
            on_path[bd.range] = true;
            Path saved = current;
            current = current.then({b, i}, bd.range);
            self(self, bd.range);
            current = std::move(saved);
            on_path[bd.range] = false;
          }
        }
      }
    };
    dfs(dfs, base);
  }
  return out;
}

inline bool is_acyclic(const Graph& g) {
  std::vector<std::size_t> indegree(g.vertex_count(), 0);
  for (const Bundle& b : g.bundles()) ++indegree[b.range];
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++removed;
    for (BundleId b : g.out_bundles(v)) {
      if (--indegree[g.bundle(b).range] == 0) ready.push_back(g.bundle(b).range);
    }
  }
  return removed == g.vertex_count();
}

inline bool has_omega_bundle(const Graph& g) {
  return std::any_of(g.bundles().begin(), g.bundles().end(),
                     [](const Bundle& b) { return b.multiplicity.is_omega(); });
}

}  // namespace lpa

#endif  // LPA_GRAPH_HPP
