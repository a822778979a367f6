#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "sgs/certificate.hpp"
#include "sgs/graph.hpp"
#include "sgs/work.hpp"

namespace sgs {

// ---------------------------------------------------------------------------
// Spanning forest

inline WorkUnits forest_work(std::size_t n, std::size_t merged, std::size_t group) {
  std::size_t m = merged + group;
  return group + n + m + m;
}

/// Keeps each edge that joins two trees of the forest built so far, scanning
/// in arrival order.
inline WorkTask<bool> forest_kernel(Meter& meter, KernelInput in) {
  co_await absorb_group(meter, in);
  UnionFind uf;
  uf.reserve(in.n);
  for (std::size_t v = 0; v < in.n; ++v) {
    co_await meter.unit();
    uf.add();
  }
  std::vector<bool> tree;
  tree.reserve(in.merged.size());
  for (const Edge& e : in.merged) {
    co_await meter.unit();
    tree.push_back(uf.unite(e.u, e.v));
  }
  co_await compact(meter, in.merged, [&](std::size_t i) { return bool(tree[i]); });
  co_return true;
}

inline Certificate build_forest_certificate(const EdgeSet& merged) {
  merged.validate();
  std::vector<Edge> edges = merged.edges;
  std::vector<Edge> group;
  run_unmetered<bool>([&](Meter& m) { return forest_kernel(m, {merged.n, edges, group}); });
  auto kind = CertificateKind::spanning_forest();
  return Certificate{kind, merged.n, std::move(edges), nominal_bound(kind, merged.n)};
}

// ---------------------------------------------------------------------------
// Forest plus one odd-cycle edge

struct BipartiteCertificate {
  EdgeSet forest;
  std::optional<Edge> odd_edge;

  std::size_t size() const noexcept { return forest.size() + (odd_edge ? 1 : 0); }

  EdgeSet edge_set() const {
    EdgeSet all = forest;
    if (odd_edge) all.edges.push_back(*odd_edge);
    return all;
  }
};

struct Bipartition {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
};

struct OddCycle {
  /// Closed walk: the first vertex is repeated at the end.
  std::vector<VertexId> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
};

using BipartitionVerdict = std::variant<Bipartition, OddCycle>;

inline WorkUnits bipartite_work(std::size_t n, std::size_t merged, std::size_t group) {
  std::size_t m = merged + group;
  // absorb, adjacency, per-vertex init, roots, one unit per arc and per
  // pop, compaction
  return group + adjacency_work(n, m) + n + n + 2 * m + n + m + 1;
}

/// Coloring depth-first search. Tree edges are kept, plus the first
/// non-tree edge in scan order whose endpoints got the same colour.
/// The index of that edge in the kernel's output is written to `odd_slot`
/// (or left as npos).
inline WorkTask<bool> bipartite_kernel(Meter& meter, KernelInput in, std::size_t* odd_slot) {
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  co_await absorb_group(meter, in);
  const std::size_t n = in.n;
  const std::size_t m = in.merged.size();
  Adjacency adj = co_await build_adjacency(meter, n, in.merged);

  std::vector<std::int8_t> colour;
  std::vector<std::uint32_t> parent_edge;
  std::vector<std::uint32_t> cursor;
  colour.reserve(n);
  parent_edge.reserve(n);
  cursor.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    co_await meter.unit();
    colour.push_back(-1);
    parent_edge.push_back(kNone);
    cursor.push_back(adj.offset[v]);
  }
  std::vector<bool> tree(m, false);
  std::uint32_t odd = kNone;
  std::vector<VertexId> stack;
  stack.reserve(n);

  co_await meter.unit();
  for (VertexId root = 0; root < n; ++root) {
    co_await meter.unit();
    if (colour[root] != -1) continue;
    colour[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId x = stack.back();
      if (cursor[x] == adj.offset[x + 1]) {
        co_await meter.unit();
        stack.pop_back();
        continue;
      }
      co_await meter.unit();
      const Adjacency::Arc arc = adj.arcs[cursor[x]++];
      if (colour[arc.to] == -1) {
        colour[arc.to] = static_cast<std::int8_t>(1 - colour[x]);
        parent_edge[arc.to] = arc.edge;
        tree[arc.edge] = true;
        stack.push_back(arc.to);
      } else if (odd == kNone && arc.edge != parent_edge[x] && colour[arc.to] == colour[x]) {
        odd = arc.edge;
      }
    }
  }

  std::size_t out = 0;
  for (std::size_t i = 0; i < m; ++i) {
    co_await meter.unit();
    if (tree[i] || i == odd) {
      if (i == odd && odd_slot) *odd_slot = out;
      in.merged[out++] = in.merged[i];
    }
  }
  in.merged.resize(out);
  co_return true;
}

inline BipartiteCertificate build_bipartite_certificate(const EdgeSet& merged) {
  merged.validate();
  std::vector<Edge> edges = merged.edges;
  std::vector<Edge> group;
  std::size_t odd_slot = static_cast<std::size_t>(-1);
  run_unmetered<bool>(
      [&](Meter& m) { return bipartite_kernel(m, {merged.n, edges, group}, &odd_slot); });
  BipartiteCertificate cert;
  cert.forest.n = merged.n;
  if (odd_slot != static_cast<std::size_t>(-1)) {
    cert.odd_edge = edges[odd_slot];
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(odd_slot));
  }
  cert.forest.edges = std::move(edges);
  return cert;
}

/// Two-colouring of the forest, or the odd cycle formed by the odd edge
/// and the forest path between its endpoints, starting at the smaller
/// endpoint. Roots and isolated vertices are coloured left.
inline BipartitionVerdict bipartition_verdict(const BipartiteCertificate& cert) {
  const std::size_t n = cert.forest.n;
  Adjacency adj = Adjacency::build(n, cert.forest.edges);
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<std::int8_t> colour(n, -1);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (const auto& arc : adj.neighbours(x)) {
        if (colour[arc.to] != -1) continue;
        colour[arc.to] = static_cast<std::int8_t>(1 - colour[x]);
        parent[arc.to] = x;
        stack.push_back(arc.to);
      }
    }
  }

  if (!cert.odd_edge) {
    Bipartition parts;
    for (VertexId v = 0; v < n; ++v) (colour[v] == 0 ? parts.left : parts.right).push_back(v);
    return parts;
  }

  // Path a -> b through the lowest common ancestor in the rooted forest.
  const VertexId a = std::min(cert.odd_edge->u, cert.odd_edge->v);
  const VertexId b = std::max(cert.odd_edge->u, cert.odd_edge->v);
  auto depth_of = [&](VertexId v) {
    std::uint32_t d = 0;
    for (VertexId x = v; parent[x] != kNoVertex; x = parent[x]) ++d;
    return d;
  };
  std::uint32_t da = depth_of(a);
  std::uint32_t db = depth_of(b);
  std::vector<VertexId> from_a{a};
  std::vector<VertexId> from_b{b};
  VertexId x = a;
  VertexId y = b;
  while (da > db) { x = parent[x]; --da; from_a.push_back(x); }
  while (db > da) { y = parent[y]; --db; from_b.push_back(y); }
  while (x != y) {
    x = parent[x];
    y = parent[y];
    from_a.push_back(x);
    from_b.push_back(y);
  }
  OddCycle cycle;
  cycle.vertices = from_a;
  from_b.pop_back();
  std::reverse(from_b.begin(), from_b.end());
  cycle.vertices.insert(cycle.vertices.end(), from_b.begin(), from_b.end());
  cycle.vertices.push_back(a);
  return cycle;
}

}  // namespace sgs
