#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgs/graph.hpp"
#include "sgs/work.hpp"

namespace sgs {

enum class CertificateType {
  SpanningForest,
  Bipartite,
  VertexConnectivity,
  EdgeConnectivity,
  MinimumSpanningForest,
};

inline const char* to_string(CertificateType t) {
  switch (t) {
    case CertificateType::SpanningForest: return "spanning-forest";
    case CertificateType::Bipartite: return "bipartite";
    case CertificateType::VertexConnectivity: return "k-vertex";
    case CertificateType::EdgeConnectivity: return "k-edge";
    case CertificateType::MinimumSpanningForest: return "msf";
  }
  return "unknown";
}

/// Property a certificate preserves. `k` is meaningful only for the two
/// connectivity types.
struct CertificateKind {
  CertificateType type = CertificateType::SpanningForest;
  unsigned k = 0;

  static CertificateKind spanning_forest() { return {CertificateType::SpanningForest, 0}; }
  static CertificateKind bipartite() { return {CertificateType::Bipartite, 0}; }
  static CertificateKind vertex_connectivity(unsigned k) {
    return checked({CertificateType::VertexConnectivity, k});
  }
  static CertificateKind edge_connectivity(unsigned k) {
    return checked({CertificateType::EdgeConnectivity, k});
  }
  static CertificateKind msf() { return {CertificateType::MinimumSpanningForest, 0}; }

  bool is_connectivity() const noexcept {
    return type == CertificateType::VertexConnectivity || type == CertificateType::EdgeConnectivity;
  }
  bool weighted() const noexcept { return type == CertificateType::MinimumSpanningForest; }

  friend bool operator==(const CertificateKind&, const CertificateKind&) = default;

 private:
  static CertificateKind checked(CertificateKind kind) {
    if (kind.k == 0) throw std::invalid_argument("connectivity certificates need k >= 1");
    return kind;
  }
};

/// Edge-count bound a certificate of this kind is held to: n-1 for forests,
/// n for a forest plus one odd-cycle edge, k*n for C_k.
inline std::size_t nominal_bound(CertificateKind kind, std::size_t n) {
  std::size_t forest = n == 0 ? 0 : n - 1;
  switch (kind.type) {
    case CertificateType::SpanningForest:
    case CertificateType::MinimumSpanningForest: return forest;
    case CertificateType::Bipartite: return n;
    case CertificateType::VertexConnectivity:
    case CertificateType::EdgeConnectivity: return std::size_t{kind.k} * n;
  }
  return 0;
}

/// Bound that holds for every input, multigraphs included. It differs from
/// nominal_bound only for vertex-connectivity C_k, where parallel edges
/// can force up to k(k+1)/2 edges per vertex.
inline std::size_t guaranteed_bound(CertificateKind kind, std::size_t n) {
  if (kind.type == CertificateType::VertexConnectivity) {
    std::size_t k = kind.k;
    return n * (k * (k + 1) / 2);
  }
  return nominal_bound(kind, n);
}

struct Certificate {
  CertificateKind kind;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::size_t bound = 0;

  EdgeSet edge_set() const { return EdgeSet(n, edges); }
  bool within_bound() const noexcept { return edges.size() <= bound; }
};

/// Working set of a recompute: `merged` holds the previous certificate and
/// receives `group` as the kernel's first step. Kernels leave their result
/// in `merged`, in arrival order, and empty `group`.
struct KernelInput {
  std::size_t n;
  std::vector<Edge>& merged;
  std::vector<Edge>& group;

  std::size_t total() const noexcept { return merged.size() + group.size(); }
};

/// Metered first step of every kernel: moves the group behind the
/// certificate edges. Costs |group| units.
inline WorkTask<bool> absorb_group(Meter& meter, KernelInput in) {
  for (const Edge& e : in.group) {
    co_await meter.unit();
    in.merged.push_back(e);
  }
  in.group.clear();
  co_return true;
}

inline WorkUnits adjacency_work(std::size_t n, std::size_t m) { return 3 * n + 2 + 2 * m; }

/// Metered Adjacency::build. Costs adjacency_work(n, m) units.
inline WorkTask<Adjacency> build_adjacency(Meter& meter, std::size_t n,
                                           const std::vector<Edge>& edges) {
  Adjacency adj;
  adj.offset.reserve(n + 1);
  for (std::size_t v = 0; v <= n; ++v) {
    co_await meter.unit();
    adj.offset.push_back(0);
  }
  for (const Edge& e : edges) {
    co_await meter.unit();
    ++adj.offset[e.u + 1];
    ++adj.offset[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    co_await meter.unit();
    adj.offset[v + 1] += adj.offset[v];
  }
  std::vector<std::uint32_t> cursor;
  cursor.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    co_await meter.unit();
    cursor.push_back(adj.offset[v]);
  }
  co_await meter.unit();
  adj.arcs.resize(2 * edges.size());
  for (std::uint32_t i = 0; i < edges.size(); ++i) {
    co_await meter.unit();
    adj.arcs[cursor[edges[i].u]++] = Adjacency::Arc{edges[i].v, i};
    adj.arcs[cursor[edges[i].v]++] = Adjacency::Arc{edges[i].u, i};
  }
  co_return adj;
}

/// Metered stable filter: keeps merged[i] where keep[i] is set. Costs
/// |merged| units.
template <class Pred>
WorkTask<bool> compact(Meter& meter, std::vector<Edge>& merged, Pred keep) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    co_await meter.unit();
    if (keep(i)) merged[out++] = merged[i];
  }
  merged.resize(out);
  co_return true;
}

}  // namespace sgs
