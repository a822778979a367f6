#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "sgs/errors.hpp"

namespace sgs {

using VertexId = std::uint32_t;
using Weight = std::uint64_t;
using StreamIndex = std::uint64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Undirected edge. `weight` is meaningful only for weighted streams and
/// `index` is the arrival position assigned by the stream engine; together
/// they form the total order used for minimum spanning forests.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight weight = 0;
  StreamIndex index = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// True when both edges join the same pair of vertices, in either orientation.
constexpr bool same_endpoints(const Edge& a, const Edge& b) noexcept {
  return (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
}

/// A multiset of edges over the fixed vertex set [0, n).
struct EdgeSet {
  std::size_t n = 0;
  std::vector<Edge> edges;

  EdgeSet() = default;
  explicit EdgeSet(std::size_t vertex_count, std::vector<Edge> list = {})
      : n(vertex_count), edges(std::move(list)) {}

  /// Builds an edge set from endpoint pairs, numbering edges by position.
  static EdgeSet from_pairs(std::size_t vertex_count,
                            std::span<const std::pair<VertexId, VertexId>> pairs) {
    EdgeSet set(vertex_count);
    set.edges.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      set.edges.push_back(Edge{pairs[i].first, pairs[i].second, 0, i});
    }
    return set;
  }

  static EdgeSet from_pairs(std::size_t vertex_count,
                            std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
    return from_pairs(vertex_count, std::span(pairs.begin(), pairs.size()));
  }

  std::size_t size() const noexcept { return edges.size(); }
  bool empty() const noexcept { return edges.empty(); }

  /// Throws VertexRangeError if some endpoint is not below n.
  void validate() const {
    for (const Edge& e : edges) {
      if (e.u >= n) throw VertexRangeError(e.u, n);
      if (e.v >= n) throw VertexRangeError(e.v, n);
    }
  }
};

/// Disjoint sets over [0, n) with path halving and union by rank.
class UnionFind {
 public:
  UnionFind() = default;
  explicit UnionFind(std::size_t n) { reset(n); }

  void reset(std::size_t n) {
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
    rank_.assign(n, 0);
    sets_ = n;
  }

  void reserve(std::size_t n) {
    parent_.reserve(n);
    rank_.reserve(n);
  }

  /// Appends vertex size() as a singleton set.
  void add() {
    parent_.push_back(static_cast<VertexId>(parent_.size()));
    rank_.push_back(0);
    ++sets_;
  }

  std::size_t size() const noexcept { return parent_.size(); }
  std::size_t set_count() const noexcept { return sets_; }

  VertexId find(VertexId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Merges the sets of a and b; returns false if they were already one set.
  bool unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --sets_;
    return true;
  }

  /// Inserts an edge; the result is true iff it joined two different sets.
  bool insert(const Edge& e) {
    if (e.u >= parent_.size()) throw VertexRangeError(e.u, parent_.size());
    if (e.v >= parent_.size()) throw VertexRangeError(e.v, parent_.size());
    return unite(e.u, e.v);
  }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint8_t> rank_;
  std::size_t sets_ = 0;
};

/// Spanning forest retaining, among the edges of g in order, each edge that
/// joins two previously separate trees. Parallel copies never survive.
inline EdgeSet spanning_forest(const EdgeSet& g) {
  g.validate();
  UnionFind uf(g.n);
  EdgeSet forest(g.n);
  for (const Edge& e : g.edges) {
    if (uf.unite(e.u, e.v)) forest.edges.push_back(e);
  }
  return forest;
}

/// Component label of each vertex: the smallest vertex id in its component.
inline std::vector<VertexId> components(const EdgeSet& g) {
  g.validate();
  UnionFind uf(g.n);
  for (const Edge& e : g.edges) uf.unite(e.u, e.v);
  std::vector<VertexId> smallest(g.n, kNoVertex);
  std::vector<VertexId> labels(g.n);
  for (VertexId v = 0; v < g.n; ++v) {
    VertexId root = uf.find(v);
    if (smallest[root] == kNoVertex) smallest[root] = v;
    labels[v] = smallest[root];
  }
  return labels;
}

inline std::size_t component_count(std::span<const VertexId> labels) {
  std::size_t count = 0;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] == v) ++count;
  }
  return count;
}

/// Compressed adjacency lists. Arcs of a vertex appear in edge order, and
/// each arc records the position of its edge in the source list.
struct Adjacency {
  struct Arc {
    VertexId to;
    std::uint32_t edge;
  };

  std::vector<std::uint32_t> offset;  // n + 1 entries
  std::vector<Arc> arcs;

  std::size_t vertex_count() const noexcept { return offset.empty() ? 0 : offset.size() - 1; }

  std::span<const Arc> neighbours(VertexId v) const {
    return std::span(arcs).subspan(offset[v], offset[v + 1] - offset[v]);
  }

  static Adjacency build(std::size_t n, std::span<const Edge> edges) {
    Adjacency adj;
    adj.offset.assign(n + 1, 0);
    for (const Edge& e : edges) {
      ++adj.offset[e.u + 1];
      ++adj.offset[e.v + 1];
    }
    for (std::size_t v = 0; v < n; ++v) adj.offset[v + 1] += adj.offset[v];
    std::vector<std::uint32_t> cursor(adj.offset.begin(), adj.offset.end() - 1);
    adj.arcs.resize(2 * edges.size());
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
      adj.arcs[cursor[edges[i].u]++] = Arc{edges[i].v, i};
      adj.arcs[cursor[edges[i].v]++] = Arc{edges[i].u, i};
    }
    return adj;
  }
};

}  // namespace sgs
