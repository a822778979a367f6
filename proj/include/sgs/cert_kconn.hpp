#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sgs/certificate.hpp"
#include "sgs/graph.hpp"
#include "sgs/work.hpp"

namespace sgs {

/// How the scan counts parallel edges. Distinct: r(y) counts distinct
/// scanned neighbours, which preserves local vertex connectivity on
/// multigraphs. Copies: r(y) counts edges, the classic scan, which
/// preserves local edge connectivity and never exceeds k*n edges.
enum class ScanMode { Distinct, Copies };

inline constexpr std::size_t kPruneAll = std::numeric_limits<std::size_t>::max();

/// Flow tests a steady-state recompute may spend on parallel copies.
inline std::size_t prune_tests_per_recompute(unsigned k) { return 4 * std::size_t{k}; }

inline WorkUnits scan_work(std::size_t n, std::size_t m) {
  // adjacency, per-vertex init, buckets, label init, picks, bucket-top
  // moves (at most n + m), arcs, compaction
  return adjacency_work(n, m) + n + (m + 1) + m + n + (n + m) + 2 * m + m;
}

namespace detail {

inline WorkUnits split_arcs(std::size_t n, std::size_t c) { return 2 * n + 4 * c; }

inline WorkUnits flow_test_work(std::size_t n, std::size_t c, unsigned k) {
  WorkUnits nodes = 2 * n;
  WorkUnits arcs = split_arcs(n, c);
  return 1 + arcs + WorkUnits{k} * (3 * nodes + arcs);
}

}  // namespace detail

inline WorkUnits prune_work(std::size_t n, std::size_t c, unsigned k, std::size_t tests) {
  WorkUnits nodes = 2 * n;
  WorkUnits arcs = detail::split_arcs(n, c);
  // adjacency, duplicate scan and ordering, network build, tests,
  // compaction
  return adjacency_work(n, c) + n + 2 * c + c + (nodes + 1 + arcs + nodes + arcs) +
         WorkUnits{tests} * detail::flow_test_work(n, c, k) + c;
}

/// Bound for kconn_kernel; `prune_tests` as passed to it.
inline WorkUnits kconn_work(std::size_t n, std::size_t merged, std::size_t group, unsigned k, ScanMode mode,
                            std::size_t prune_tests) {
  std::size_t m = merged + group;
  WorkUnits w = group + scan_work(n, m);
  if (mode == ScanMode::Distinct) w += prune_work(n, m, k, std::min(prune_tests, m));
  return w;
}

namespace detail {

/// Vertex-split unit network over a certificate, rebuilt per recompute.
/// Node 2v is v_in and 2v+1 is v_out. Arc 2v is v_in -> v_out; edge i
/// contributes u_out -> v_in and v_out -> u_in. Every arc a has its
/// reverse at a ^ 1.
struct SplitNetwork {
  std::size_t n = 0;
  const std::vector<Edge>* edges = nullptr;
  std::vector<std::uint32_t> offset;
  std::vector<std::uint32_t> arcs;  // arc ids grouped by tail node
  std::vector<std::int32_t> flow;
  std::vector<std::uint32_t> via;
  std::vector<std::uint32_t> queue;

  static constexpr std::int32_t kInfinite = std::numeric_limits<std::int32_t>::max() / 2;
  static constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

  std::uint32_t base() const { return static_cast<std::uint32_t>(2 * n); }

  std::uint32_t head(std::uint32_t a) const {
    if (a < base()) return (a & 1u) ? (a & ~1u) : (a | 1u);
    const Edge& e = (*edges)[(a - base()) / 4];
    switch ((a - base()) % 4) {
      case 0: return 2 * e.v;
      case 1: return 2 * e.u + 1;
      case 2: return 2 * e.u;
      default: return 2 * e.v + 1;
    }
  }
  std::uint32_t tail(std::uint32_t a) const { return head(a ^ 1u); }

  std::int32_t capacity(std::uint32_t a, VertexId x, VertexId y, const std::vector<bool>& off) const {
    if (a & 1u) return 0;
    if (a < base()) {
      VertexId v = a / 2;
      return v == x || v == y ? kInfinite : 1;
    }
    std::size_t i = (a - base()) / 4;
    if (off[i]) return 0;
    const Edge& e = (*edges)[i];
    bool direct = (e.u == x && e.v == y) || (e.u == y && e.v == x);
    return direct ? 1 : kInfinite;
  }
};

inline WorkTask<bool> build_split_network(Meter& meter, SplitNetwork& net, std::size_t n,
                                          const std::vector<Edge>& edges) {
  net.n = n;
  net.edges = &edges;
  const std::size_t nodes = 2 * n;
  const std::size_t arcs = split_arcs(n, edges.size());
  net.offset.clear();
  net.offset.reserve(nodes + 1);
  for (std::size_t v = 0; v <= nodes; ++v) {
    co_await meter.unit();
    net.offset.push_back(0);
  }
  net.arcs.resize(arcs);
  net.flow.resize(arcs);
  net.via.resize(nodes);
  net.queue.resize(nodes);
  for (std::uint32_t a = 0; a < arcs; ++a) {
    co_await meter.unit();
    ++net.offset[net.tail(a) + 1];
  }
  for (std::size_t v = 0; v < nodes; ++v) {
    co_await meter.unit();
    net.offset[v + 1] += net.offset[v];
  }
  std::vector<std::uint32_t> cursor(net.offset.begin(), net.offset.end() - 1);
  for (std::uint32_t a = 0; a < arcs; ++a) {
    co_await meter.unit();
    net.arcs[cursor[net.tail(a)]++] = a;
  }
  co_return true;
}

/// True iff x and y have at least k internally disjoint paths among the
/// edges not switched off. Costs at most flow_test_work units.
inline WorkTask<bool> flow_at_least(Meter& meter, SplitNetwork& net, VertexId x, VertexId y, unsigned k,
                                    const std::vector<bool>& off) {
  co_await meter.unit();
  for (auto& f : net.flow) {
    co_await meter.unit();
    f = 0;
  }
  const std::uint32_t s = 2 * x + 1;
  const std::uint32_t t = 2 * y;
  for (unsigned found = 0; found < k; ++found) {
    for (auto& v : net.via) {
      co_await meter.unit();
      v = SplitNetwork::kUnseen;
    }
    std::size_t qh = 0, qt = 0;
    net.queue[qt++] = s;
    net.via[s] = 0;
    while (qh < qt && net.via[t] == SplitNetwork::kUnseen) {
      co_await meter.unit();
      std::uint32_t a = net.queue[qh++];
      for (std::uint32_t i = net.offset[a]; i < net.offset[a + 1]; ++i) {
        co_await meter.unit();
        std::uint32_t arc = net.arcs[i];
        std::uint32_t h = net.head(arc);
        if (h == s || net.via[h] != SplitNetwork::kUnseen) continue;
        if (net.capacity(arc, x, y, off) - net.flow[arc] <= 0) continue;
        net.via[h] = arc;
        net.queue[qt++] = h;
      }
    }
    if (net.via[t] == SplitNetwork::kUnseen) co_return false;
    for (std::uint32_t v = t; v != s;) {
      co_await meter.unit();
      std::uint32_t arc = net.via[v];
      ++net.flow[arc];
      --net.flow[arc ^ 1u];
      v = net.tail(arc);
    }
  }
  co_return true;
}

}  // namespace detail

/// Drops parallel copies the certificate does not need: a copy of x-y goes
/// when x and y keep k internally disjoint paths without it. Later arrivals
/// are tried first, at most `max_tests` flow tests in all. Dropping a copy
/// while another copy stays never lowers any other local connectivity, so
/// every prefix of this process is sound. `labels`, when given, is kept
/// aligned with `edges`.
inline WorkTask<bool> prune_kernel(Meter& meter, std::size_t n, std::vector<Edge>& edges, unsigned k,
                                   std::size_t max_tests, std::vector<std::uint32_t>* labels = nullptr) {
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  const std::size_t c = edges.size();
  Adjacency adj = co_await build_adjacency(meter, n, edges);

  // Copies after the first of each parallel class, latest arrival first.
  std::vector<std::uint32_t> stamp;
  stamp.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    co_await meter.unit();
    stamp.push_back(kNone);
  }
  std::vector<std::uint32_t> surplus;
  for (VertexId x = 0; x < n; ++x) {
    for (const auto& arc : adj.neighbours(x)) {
      co_await meter.unit();
      if (arc.to < x) continue;
      if (stamp[arc.to] == x) surplus.push_back(arc.edge);
      stamp[arc.to] = x;
    }
  }
  for (std::size_t i = 0; i < surplus.size(); ++i) co_await meter.unit();
  std::size_t tried = std::min(max_tests, surplus.size());
  std::partial_sort(surplus.begin(), surplus.begin() + static_cast<std::ptrdiff_t>(tried), surplus.end(),
                    std::greater<>());
  surplus.resize(tried);

  std::vector<bool> off(c, false);
  if (!surplus.empty()) {
    detail::SplitNetwork net;
    co_await detail::build_split_network(meter, net, n, edges);
    for (std::uint32_t i : surplus) {
      off[i] = true;
      if (!co_await detail::flow_at_least(meter, net, edges[i].u, edges[i].v, k, off)) off[i] = false;
    }
  }

  std::size_t out = 0;
  for (std::size_t i = 0; i < c; ++i) {
    co_await meter.unit();
    if (off[i]) continue;
    if (labels) (*labels)[out] = (*labels)[i];
    edges[out++] = edges[i];
  }
  edges.resize(out);
  if (labels) labels->resize(out);
  co_return true;
}

/// Maximum-adjacency scan numbering each edge by the order in which it
/// reaches its later-scanned endpoint; edges numbered at most k form C_k.
/// In Distinct mode, scanning x gives the first copy of each parallel class
/// x-y the label r(y)+1 and raises r(y) by one, and further copies of that
/// class the following labels. In Copies mode every copy raises r(y).
/// `labels`, when given, receives the label of every kept edge.
inline WorkTask<bool> scan_kernel(Meter& meter, std::size_t n, std::vector<Edge>& edges, unsigned k,
                                  ScanMode mode, std::vector<std::uint32_t>* labels = nullptr) {
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  const std::size_t m = edges.size();
  Adjacency adj = co_await build_adjacency(meter, n, edges);

  // Bucket queue keyed by r, one doubly linked list per bucket.
  std::vector<std::uint32_t> r, next, prev, head, stamp, following;
  std::vector<bool> scanned;
  for (auto* a : {&r, &next, &prev, &head, &stamp, &following}) a->reserve(n);
  scanned.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    co_await meter.unit();
    r.push_back(0);
    next.push_back(kNone);
    prev.push_back(kNone);
    head.push_back(kNone);
    stamp.push_back(kNone);
    following.push_back(0);
    scanned.push_back(false);
  }
  // r never exceeds the number of edges at a vertex.
  for (std::size_t i = 0; i <= m; ++i) {
    co_await meter.unit();
    head.push_back(kNone);
  }
  auto unlink = [&](std::uint32_t v) {
    if (prev[v] != kNone) next[prev[v]] = next[v];
    else head[r[v]] = next[v];
    if (next[v] != kNone) prev[next[v]] = prev[v];
  };
  auto push = [&](std::uint32_t v) {
    prev[v] = kNone;
    next[v] = head[r[v]];
    if (next[v] != kNone) prev[next[v]] = v;
    head[r[v]] = v;
  };
  // Pushed in reverse so that ties pop the smallest id first.
  for (std::size_t v = n; v-- > 0;) push(static_cast<std::uint32_t>(v));

  std::vector<std::uint32_t> label;
  label.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    co_await meter.unit();
    label.push_back(kNone);
  }

  std::size_t top = 0;
  for (std::size_t step = 0; step < n; ++step) {
    while (head[top] == kNone) {
      co_await meter.unit();
      --top;
    }
    co_await meter.unit();
    const std::uint32_t x = head[top];
    unlink(x);
    scanned[x] = true;
    for (const auto& arc : adj.neighbours(x)) {
      co_await meter.unit();
      const std::uint32_t y = arc.to;
      if (scanned[y]) continue;
      if (mode == ScanMode::Distinct && stamp[y] == x) {
        label[arc.edge] = following[y]++;
        continue;
      }
      stamp[y] = x;
      unlink(y);
      ++r[y];
      push(y);
      if (r[y] > top) top = r[y];
      label[arc.edge] = r[y];
      following[y] = r[y] + 1;
    }
  }

  if (labels) labels->clear();
  std::size_t out = 0;
  for (std::size_t i = 0; i < m; ++i) {
    co_await meter.unit();
    if (label[i] <= k) {
      if (labels) labels->push_back(label[i]);
      edges[out++] = edges[i];
    }
  }
  edges.resize(out);
  co_return true;
}

/// Steady-state C_k recompute: scan, then (vertex connectivity only) a
/// bounded prune of parallel copies.
inline WorkTask<bool> kconn_kernel(Meter& meter, KernelInput in, unsigned k, ScanMode mode,
                                   std::size_t prune_tests) {
  co_await absorb_group(meter, in);
  co_await scan_kernel(meter, in.n, in.merged, k, mode);
  if (mode == ScanMode::Distinct) co_await prune_kernel(meter, in.n, in.merged, k, prune_tests);
  co_return true;
}

inline ScanMode scan_mode_for(CertificateType type) {
  return type == CertificateType::EdgeConnectivity ? ScanMode::Copies : ScanMode::Distinct;
}

/// C_k of `merged`. For vertex connectivity it preserves every local vertex
/// and edge connectivity up to k; for edge connectivity it preserves local
/// edge connectivity up to k. At most k*n edges except on multigraphs for
/// vertex connectivity, where k*n is not always achievable; there the
/// result stays within n*k(k+1)/2.
inline Certificate build_k_certificate(const EdgeSet& merged, unsigned k,
                                       CertificateType type = CertificateType::VertexConnectivity) {
  merged.validate();
  CertificateKind kind = type == CertificateType::EdgeConnectivity ? CertificateKind::edge_connectivity(k)
                                                                   : CertificateKind::vertex_connectivity(k);
  std::vector<Edge> edges = merged.edges;
  std::vector<Edge> group;
  run_unmetered<bool>([&](Meter& m) {
    return kconn_kernel(m, {merged.n, edges, group}, k, scan_mode_for(type), kPruneAll);
  });
  return Certificate{kind, merged.n, std::move(edges), nominal_bound(kind, merged.n)};
}

/// Layers F_1..F_k of C_k: F_i holds the edges with scan label i. On a
/// simple graph F_i is a maximal spanning forest of the input minus the
/// earlier layers.
struct ForestDecomposition {
  unsigned k = 0;
  std::vector<EdgeSet> forests;

  EdgeSet edge_union() const {
    EdgeSet all(forests.empty() ? 0 : forests.front().n);
    for (const auto& f : forests) all.edges.insert(all.edges.end(), f.edges.begin(), f.edges.end());
    std::sort(all.edges.begin(), all.edges.end(), [](const Edge& a, const Edge& b) { return a.index < b.index; });
    return all;
  }
};

inline ForestDecomposition decompose_forests(const EdgeSet& merged, unsigned k) {
  if (k == 0) throw std::invalid_argument("decompose_forests needs k >= 1");
  merged.validate();
  std::vector<Edge> edges = merged.edges;
  std::vector<std::uint32_t> labels;
  run_unmetered<bool>([&](Meter& m) -> WorkTask<bool> {
    return scan_kernel(m, merged.n, edges, k, ScanMode::Distinct, &labels);
  });
  run_unmetered<bool>([&](Meter& m) { return prune_kernel(m, merged.n, edges, k, kPruneAll, &labels); });
  ForestDecomposition d;
  d.k = k;
  d.forests.assign(k, EdgeSet(merged.n));
  for (std::size_t i = 0; i < edges.size(); ++i) d.forests[labels[i] - 1].edges.push_back(edges[i]);
  return d;
}

}  // namespace sgs
