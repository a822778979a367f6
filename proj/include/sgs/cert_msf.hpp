#pragma once

#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "sgs/certificate.hpp"
#include "sgs/graph.hpp"
#include "sgs/work.hpp"

namespace sgs {

/// Total order on stream edges: weight first, arrival index second.
struct TotalOrderKey {
  Weight weight = 0;
  StreamIndex stream_index = 0;

  static TotalOrderKey of(const Edge& e) noexcept { return {e.weight, e.index}; }

  friend auto operator<=>(const TotalOrderKey&, const TotalOrderKey&) = default;
};

/// Number of merge passes a bottom-up merge sort makes over m items.
inline std::size_t merge_passes(std::size_t m) {
  std::size_t passes = 0;
  for (std::size_t width = 1; width < m; width *= 2) ++passes;
  return passes;
}

inline WorkUnits msf_work(std::size_t n, std::size_t merged, std::size_t group) {
  std::size_t m = merged + group;
  // absorb, index init, merge passes, union-find init, sweep, compaction
  return group + m + m * merge_passes(m) + n + m + m;
}

/// Sorts the merged edges by TotalOrderKey with a bottom-up merge sort,
/// sweeps them through union-find, and keeps the accepted edges in
/// arrival order.
inline WorkTask<bool> msf_kernel(Meter& meter, KernelInput in) {
  co_await absorb_group(meter, in);
  const std::size_t m = in.merged.size();
  const auto& edges = in.merged;

  std::vector<std::uint32_t> order;
  order.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    co_await meter.unit();
    order.push_back(static_cast<std::uint32_t>(i));
  }
  std::vector<std::uint32_t> scratch(m);
  for (std::size_t width = 1; width < m; width *= 2) {
    std::size_t out = 0;
    for (std::size_t lo = 0; lo < m; lo += 2 * width) {
      std::size_t mid = std::min(lo + width, m);
      std::size_t hi = std::min(lo + 2 * width, m);
      std::size_t a = lo;
      std::size_t b = mid;
      while (a < mid || b < hi) {
        co_await meter.unit();
        if (b == hi || (a < mid && TotalOrderKey::of(edges[order[a]]) <=
                                       TotalOrderKey::of(edges[order[b]]))) {
          scratch[out++] = order[a++];
        } else {
          scratch[out++] = order[b++];
        }
      }
    }
    order.swap(scratch);
  }

  UnionFind uf;
  uf.reserve(in.n);
  for (std::size_t v = 0; v < in.n; ++v) {
    co_await meter.unit();
    uf.add();
  }
  std::vector<bool> keep(m, false);
  for (std::uint32_t i : order) {
    co_await meter.unit();
    if (uf.unite(edges[i].u, edges[i].v)) keep[i] = true;
  }
  co_await compact(meter, in.merged, [&](std::size_t i) { return bool(keep[i]); });
  co_return true;
}

/// Unique minimum spanning forest of `merged` under TotalOrderKey.
inline Certificate build_msf(const EdgeSet& merged) {
  merged.validate();
  std::vector<Edge> edges = merged.edges;
  std::vector<Edge> group;
  run_unmetered<bool>([&](Meter& m) { return msf_kernel(m, {merged.n, edges, group}); });
  auto kind = CertificateKind::msf();
  return Certificate{kind, merged.n, std::move(edges), nominal_bound(kind, merged.n)};
}

inline Weight msf_weight(const Certificate& cert) {
  if (cert.kind.type != CertificateType::MinimumSpanningForest) {
    throw std::invalid_argument(std::string("msf_weight called on a ") + to_string(cert.kind.type) +
                                " certificate");
  }
  Weight total = 0;
  for (const Edge& e : cert.edges) total += e.weight;
  return total;
}

}  // namespace sgs
