#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "sgs/graph.hpp"

namespace sgs {

/// Directed network with integer capacities. Arcs are stored in pairs so
/// that arc i and arc i^1 are residual partners.
class FlowNetwork {
 public:
  static constexpr std::int32_t kInfinite = std::numeric_limits<std::int32_t>::max() / 2;

  explicit FlowNetwork(std::size_t nodes) : out_(nodes) {}

  std::size_t node_count() const noexcept { return out_.size(); }

  void add_arc(std::uint32_t a, std::uint32_t b, std::int32_t cap) { add_pair(a, b, cap, 0); }

  /// Undirected unit edge: one unit of capacity usable in either direction.
  void add_undirected(std::uint32_t a, std::uint32_t b) { add_pair(a, b, 1, 1); }

  /// Augments along shortest paths until the flow reaches `limit` or no
  /// augmenting path remains. Returns the flow value.
  std::int64_t max_flow(std::uint32_t s, std::uint32_t t,
                        std::int64_t limit = std::numeric_limits<std::int64_t>::max()) {
    std::int64_t flow = 0;
    std::vector<std::int32_t> via(out_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<std::uint32_t> queue;
      queue.push(s);
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        std::uint32_t a = queue.front();
        queue.pop();
        for (std::uint32_t id : out_[a]) {
          const Arc& arc = arcs_[id];
          if (arc.cap > 0 && via[arc.to] == -1) {
            via[arc.to] = static_cast<std::int32_t>(id);
            queue.push(arc.to);
          }
        }
      }
      if (via[t] == -1) break;
      std::int32_t push = kInfinite;
      for (std::uint32_t x = t; x != s; x = arcs_[via[x] ^ 1].to) push = std::min(push, arcs_[via[x]].cap);
      push = static_cast<std::int32_t>(std::min<std::int64_t>(push, limit - flow));
      for (std::uint32_t x = t; x != s; x = arcs_[via[x] ^ 1].to) {
        arcs_[via[x]].cap -= push;
        arcs_[via[x] ^ 1].cap += push;
      }
      flow += push;
    }
    return flow;
  }

  /// Nodes reachable from s in the residual network.
  std::vector<bool> reachable(std::uint32_t s) const {
    std::vector<bool> seen(out_.size(), false);
    std::vector<std::uint32_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::uint32_t a = stack.back();
      stack.pop_back();
      for (std::uint32_t id : out_[a]) {
        if (arcs_[id].cap > 0 && !seen[arcs_[id].to]) {
          seen[arcs_[id].to] = true;
          stack.push_back(arcs_[id].to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::uint32_t to;
    std::int32_t cap;
  };

  void add_pair(std::uint32_t a, std::uint32_t b, std::int32_t forward, std::int32_t backward) {
    out_[a].push_back(static_cast<std::uint32_t>(arcs_.size()));
    arcs_.push_back({b, forward});
    out_[b].push_back(static_cast<std::uint32_t>(arcs_.size()));
    arcs_.push_back({a, backward});
  }

  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<Arc> arcs_;
};

/// Separator (vertex set) or cut (edge set) of size `size()`.
struct CutWitness {
  enum class Type { Separator, Cut };
  Type type = Type::Separator;
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;

  std::size_t size() const noexcept {
    return type == Type::Separator ? vertices.size() : edges.size();
  }
};

namespace detail {

inline void check_pair(const EdgeSet& g, VertexId x, VertexId y) {
  if (x >= g.n) throw VertexRangeError(x, g.n);
  if (y >= g.n) throw VertexRangeError(y, g.n);
  if (x == y) throw std::invalid_argument("local connectivity needs two distinct vertices");
}

// v_in = 2v, v_out = 2v+1. x and y are not split. Only vertex arcs and
// direct x-y edges have finite capacity, so minimum cuts are separators
// plus the direct edges.
inline FlowNetwork split_network(const EdgeSet& g, VertexId x, VertexId y) {
  FlowNetwork net(2 * g.n);
  for (VertexId v = 0; v < g.n; ++v) {
    net.add_arc(2 * v, 2 * v + 1, v == x || v == y ? FlowNetwork::kInfinite : 1);
  }
  for (const Edge& e : g.edges) {
    bool direct = (e.u == x && e.v == y) || (e.u == y && e.v == x);
    std::int32_t cap = direct ? 1 : FlowNetwork::kInfinite;
    net.add_arc(2 * e.u + 1, 2 * e.v, cap);
    net.add_arc(2 * e.v + 1, 2 * e.u, cap);
  }
  return net;
}

inline FlowNetwork edge_network(const EdgeSet& g) {
  FlowNetwork net(g.n);
  for (const Edge& e : g.edges) net.add_undirected(e.u, e.v);
  return net;
}

inline CutWitness separator_from(const FlowNetwork& net, const EdgeSet& g, VertexId x) {
  auto seen = net.reachable(2 * x + 1);
  CutWitness w;
  for (VertexId v = 0; v < g.n; ++v) {
    if (seen[2 * v] && !seen[2 * v + 1]) w.vertices.push_back(v);
  }
  return w;
}

inline CutWitness cut_from(const FlowNetwork& net, const EdgeSet& g, VertexId x) {
  auto seen = net.reachable(x);
  CutWitness w;
  w.type = CutWitness::Type::Cut;
  for (const Edge& e : g.edges) {
    if (seen[e.u] != seen[e.v]) w.edges.push_back(e);
  }
  return w;
}

}  // namespace detail

/// Number of internally vertex-disjoint x-y paths, capped at `limit`.
/// Each parallel x-y edge is a path of its own.
inline std::size_t local_kappa(const EdgeSet& g, VertexId x, VertexId y,
                               std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  detail::check_pair(g, x, y);
  auto net = detail::split_network(g, x, y);
  auto cap = static_cast<std::int64_t>(std::min<std::size_t>(limit, g.edges.size()));
  return static_cast<std::size_t>(net.max_flow(2 * x + 1, 2 * y, cap));
}

/// Number of edge-disjoint x-y paths, capped at `limit`.
inline std::size_t local_lambda(const EdgeSet& g, VertexId x, VertexId y,
                                std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  detail::check_pair(g, x, y);
  auto net = detail::edge_network(g);
  auto cap = static_cast<std::int64_t>(std::min<std::size_t>(limit, g.edges.size()));
  return static_cast<std::size_t>(net.max_flow(x, y, cap));
}

struct ConnectivityResult {
  bool holds = false;
  std::optional<CutWitness> witness;
};

/// k-vertex connectivity: n >= k+1 and no fewer than k vertices separate
/// the graph. Flows run from each of the first k vertices to every vertex
/// not adjacent to it; any separator smaller than k misses one of those
/// sources. The witness, when the answer is no, is a minimum separator.
inline ConnectivityResult is_k_vertex_connected(const EdgeSet& g, unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  g.validate();
  if (g.n < std::size_t{k} + 1) return {false, std::nullopt};
  std::vector<std::vector<bool>> adjacent(k, std::vector<bool>(g.n, false));
  for (const Edge& e : g.edges) {
    if (e.u < k) adjacent[e.u][e.v] = true;
    if (e.v < k) adjacent[e.v][e.u] = true;
  }
  std::optional<CutWitness> best;
  for (VertexId s = 0; s < k; ++s) {
    for (VertexId t = 0; t < g.n; ++t) {
      if (t == s || adjacent[s][t]) continue;
      auto net = detail::split_network(g, s, t);
      std::size_t limit = best ? best->size() : k;
      auto flow = static_cast<std::size_t>(net.max_flow(2 * s + 1, 2 * t, static_cast<std::int64_t>(limit)));
      if (flow < limit) best = detail::separator_from(net, g, s);
    }
  }
  return {!best.has_value(), best};
}

/// k-edge connectivity via lambda(0, v) for every v. A single vertex is
/// k-edge-connected for every k. The witness is a minimum cut.
inline ConnectivityResult is_k_edge_connected(const EdgeSet& g, unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  g.validate();
  std::optional<CutWitness> best;
  for (VertexId t = 1; t < g.n; ++t) {
    auto net = detail::edge_network(g);
    std::size_t limit = best ? best->size() : k;
    auto flow = static_cast<std::size_t>(net.max_flow(0, t, static_cast<std::int64_t>(limit)));
    if (flow < limit) best = detail::cut_from(net, g, 0);
  }
  return {!best.has_value(), best};
}

namespace detail {

inline std::size_t count_components_without(const EdgeSet& g, const std::vector<bool>& gone_vertex,
                                             const std::vector<bool>& gone_edge) {
  UnionFind uf(g.n);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    if (!gone_edge.empty() && gone_edge[i]) continue;
    if (!gone_vertex.empty() && (gone_vertex[e.u] || gone_vertex[e.v])) continue;
    uf.unite(e.u, e.v);
  }
  std::size_t removed = 0;
  for (bool b : gone_vertex) removed += b;
  return uf.set_count() - removed;
}

template <class Visit>
void for_each_subset(std::size_t universe, std::size_t max_size, Visit visit) {
  std::vector<std::size_t> pick;
  for (std::size_t size = 1; size <= std::min(max_size, universe); ++size) {
    pick.resize(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      visit(pick);
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == universe - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

inline std::uint64_t subset_count(std::size_t universe, std::size_t max_size) {
  std::uint64_t total = 0;
  std::uint64_t c = 1;
  for (std::size_t s = 1; s <= std::min(max_size, universe); ++s) {
    c = c * (universe - s + 1) / s;
    total += c;
  }
  return total;
}

}  // namespace detail

inline constexpr std::size_t kMaxEnumerationVertices = 12;
inline constexpr std::uint64_t kMaxEnumerationSubsets = 5'000'000;

/// Every vertex set of size 1..max_size whose removal increases the number
/// of components. Exponential; n <= 12 only.
inline std::vector<CutWitness> enumerate_separators(const EdgeSet& g, std::size_t max_size) {
  if (g.n > kMaxEnumerationVertices) {
    throw std::invalid_argument("separator enumeration is limited to n <= 12");
  }
  g.validate();
  const std::size_t base = detail::count_components_without(g, {}, {});
  std::vector<CutWitness> found;
  std::vector<bool> gone(g.n);
  detail::for_each_subset(g.n, max_size, [&](const std::vector<std::size_t>& pick) {
    std::fill(gone.begin(), gone.end(), false);
    for (std::size_t v : pick) gone[v] = true;
    if (detail::count_components_without(g, gone, {}) > base) {
      CutWitness w;
      for (std::size_t v : pick) w.vertices.push_back(static_cast<VertexId>(v));
      found.push_back(std::move(w));
    }
  });
  return found;
}

/// Every edge set of size 1..max_size whose removal increases the number
/// of components. Exponential; refuses more than 5e6 subsets.
inline std::vector<CutWitness> enumerate_cuts(const EdgeSet& g, std::size_t max_size) {
  if (detail::subset_count(g.edges.size(), max_size) > kMaxEnumerationSubsets) {
    throw std::invalid_argument("cut enumeration over too many edge subsets");
  }
  g.validate();
  const std::size_t base = detail::count_components_without(g, {}, {});
  std::vector<CutWitness> found;
  std::vector<bool> gone(g.edges.size());
  detail::for_each_subset(g.edges.size(), max_size, [&](const std::vector<std::size_t>& pick) {
    std::fill(gone.begin(), gone.end(), false);
    for (std::size_t i : pick) gone[i] = true;
    if (detail::count_components_without(g, {}, gone) > base) {
      CutWitness w;
      w.type = CutWitness::Type::Cut;
      for (std::size_t i : pick) w.edges.push_back(g.edges[i]);
      found.push_back(std::move(w));
    }
  });
  return found;
}

}  // namespace sgs
