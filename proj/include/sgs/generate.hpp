#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sgs/graph.hpp"

namespace sgs {

enum class GraphModel { Gnm, Cycle, Complete, Bipartite, TwoBlocks };
enum class StreamOrder { Random, SortedByEndpoint, AdversarialDenseFirst };

inline GraphModel parse_model(std::string_view s) {
  if (s == "gnm") return GraphModel::Gnm;
  if (s == "cycle") return GraphModel::Cycle;
  if (s == "complete") return GraphModel::Complete;
  if (s == "bipartite") return GraphModel::Bipartite;
  if (s == "two-blocks") return GraphModel::TwoBlocks;
  throw std::invalid_argument("unknown model '" + std::string(s) + "'");
}

inline StreamOrder parse_order(std::string_view s) {
  if (s == "random") return StreamOrder::Random;
  if (s == "sorted-by-endpoint") return StreamOrder::SortedByEndpoint;
  if (s == "adversarial-dense-first") return StreamOrder::AdversarialDenseFirst;
  throw std::invalid_argument("unknown order '" + std::string(s) + "'");
}

struct GeneratorOptions {
  std::size_t n = 0;
  std::optional<std::uint64_t> m;  // defaults to the model's edge count; required for gnm
  GraphModel model = GraphModel::Gnm;
  StreamOrder order = StreamOrder::Random;
  std::uint64_t seed = 0;
  bool weighted = false;
  bool multigraph = false;  // sample with replacement
  Weight max_weight = 100;  // weights are uniform in [0, max_weight]
};

/// Uniform integer in [0, bound) by rejection, identical on every platform.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

template <class T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

/// Number of distinct edges the model admits on n vertices.
inline std::uint64_t model_capacity(GraphModel model, std::size_t n) {
  const std::uint64_t N = n;
  switch (model) {
    case GraphModel::Gnm:
    case GraphModel::Complete: return N * (N - (N > 0)) / 2;
    case GraphModel::Cycle: return N >= 3 ? N : (N == 2 ? 1 : 0);
    case GraphModel::Bipartite: return (N / 2) * (N - N / 2);
    case GraphModel::TwoBlocks: {
      std::uint64_t h = N / 2;
      std::uint64_t a = h + 1;  // [0, h]
      std::uint64_t b = N - h;  // [h, n)
      return N < 2 ? 0 : a * (a - 1) / 2 + b * (b - 1) / 2;
    }
  }
  return 0;
}

namespace detail {

inline std::vector<Edge> model_edges(GraphModel model, std::size_t n) {
  std::vector<Edge> out;
  auto clique = [&](VertexId lo, VertexId hi) {  // [lo, hi)
    for (VertexId u = lo; u < hi; ++u)
      for (VertexId v = u + 1; v < hi; ++v) out.push_back({u, v, 0, 0});
  };
  const auto N = static_cast<VertexId>(n);
  switch (model) {
    case GraphModel::Gnm:
    case GraphModel::Complete: clique(0, N); break;
    case GraphModel::Cycle:
      if (N == 2) out.push_back({0, 1, 0, 0});
      if (N >= 3)
        for (VertexId v = 0; v < N; ++v) out.push_back({std::min(v, (v + 1) % N), std::max(v, (v + 1) % N), 0, 0});
      break;
    case GraphModel::Bipartite:
      for (VertexId u = 0; u < N / 2; ++u)
        for (VertexId v = N / 2; v < N; ++v) out.push_back({u, v, 0, 0});
      break;
    case GraphModel::TwoBlocks:
      if (N >= 2) {
        clique(0, N / 2 + 1);
        clique(N / 2, N);
      }
      break;
  }
  return out;
}

inline std::uint64_t pair_key(VertexId u, VertexId v) {
  return std::uint64_t{std::min(u, v)} << 32 | std::max(u, v);
}

}  // namespace detail

/// Deterministic edge stream for the given options. Edge indexes are the
/// stream positions.
inline EdgeSet generate(const GeneratorOptions& opt) {
  if (opt.n == 0) throw std::invalid_argument("generator needs n >= 1");
  const std::uint64_t capacity = model_capacity(opt.model, opt.n);
  if (opt.model == GraphModel::Gnm && !opt.m) throw std::invalid_argument("gnm needs m");
  const std::uint64_t m = opt.m.value_or(capacity);
  if (m > capacity && !opt.multigraph) {
    throw std::invalid_argument("m = " + std::to_string(m) + " exceeds the model's " +
                                std::to_string(capacity) + " distinct edges; use the multigraph option");
  }
  if (m > 0 && capacity == 0) throw std::invalid_argument("the model has no edges on this many vertices");

  std::mt19937_64 rng(opt.seed);
  EdgeSet g(opt.n);
  g.edges.reserve(m);
  const auto N = static_cast<std::uint64_t>(opt.n);
  auto random_pair = [&]() {
    auto u = static_cast<VertexId>(uniform_below(rng, N));
    auto v = static_cast<VertexId>(uniform_below(rng, N - 1));
    if (v >= u) ++v;
    return Edge{std::min(u, v), std::max(u, v), 0, 0};
  };

  if (opt.model == GraphModel::Gnm && (opt.multigraph || 2 * m <= capacity)) {
    std::unordered_set<std::uint64_t> seen;
    while (g.edges.size() < m) {
      Edge e = random_pair();
      if (opt.multigraph || seen.insert(detail::pair_key(e.u, e.v)).second) g.edges.push_back(e);
    }
  } else {
    std::vector<Edge> universe = detail::model_edges(opt.model, opt.n);
    if (opt.multigraph) {
      for (std::uint64_t i = 0; i < m; ++i) g.edges.push_back(universe[uniform_below(rng, universe.size())]);
    } else {
      shuffle(universe, rng);
      universe.resize(m);
      g.edges = std::move(universe);
    }
  }

  if (opt.weighted) {
    for (Edge& e : g.edges) e.weight = uniform_below(rng, opt.max_weight + 1);
  }

  switch (opt.order) {
    case StreamOrder::Random: shuffle(g.edges, rng); break;
    case StreamOrder::SortedByEndpoint:
      std::stable_sort(g.edges.begin(), g.edges.end(),
                       [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
      break;
    case StreamOrder::AdversarialDenseFirst: {
      std::vector<std::uint64_t> degree(opt.n, 0);
      for (const Edge& e : g.edges) {
        ++degree[e.u];
        ++degree[e.v];
      }
      std::stable_sort(g.edges.begin(), g.edges.end(), [&](const Edge& a, const Edge& b) {
        auto da = degree[a.u] + degree[a.v];
        auto db = degree[b.u] + degree[b.v];
        if (da != db) return da > db;
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
      });
      break;
    }
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) g.edges[i].index = i;
  return g;
}

}  // namespace sgs
