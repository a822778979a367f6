#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sgs/cert_kconn.hpp"
#include "sgs/oracle.hpp"

namespace {

using sgs::CertificateType;
using sgs::Edge;
using sgs::EdgeSet;
using sgs::VertexId;

EdgeSet complete(std::size_t n) {
  EdgeSet g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) g.edges.push_back({u, v, 0, g.edges.size()});
  return g;
}

TEST(KCertificate, KOneIsASpanningForest) {
  auto g = complete(6);
  auto c = sgs::build_k_certificate(g, 1);
  EXPECT_EQ(c.edges.size(), 5u);
  EXPECT_EQ(sgs::components(c.edge_set()), sgs::components(g));
}

TEST(KCertificate, CompleteFiveKTwo) {
  auto c = sgs::build_k_certificate(complete(5), 2);
  EXPECT_LE(c.edges.size(), 7u);
  EXPECT_EQ(c.bound, 10u);
  EXPECT_TRUE(sgs::is_k_vertex_connected(c.edge_set(), 2).holds);
}

TEST(KCertificate, RejectsKZero) {
  EXPECT_THROW(sgs::build_k_certificate(complete(3), 0), std::invalid_argument);
  EXPECT_THROW(sgs::decompose_forests(complete(3), 0), std::invalid_argument);
}

TEST(ForestDecomposition, Triangle) {
  auto d = sgs::decompose_forests(complete(3), 2);
  ASSERT_EQ(d.forests.size(), 2u);
  EXPECT_EQ(d.forests[0].size(), 2u);
  EXPECT_EQ(d.forests[1].size(), 1u);
  EXPECT_EQ(d.edge_union().size(), 3u);
}

TEST(ForestDecomposition, ForestInputFillsOnlyTheFirstLayer) {
  auto path = EdgeSet::from_pairs(5, {{0, 1}, {1, 2}, {3, 4}});
  auto d = sgs::decompose_forests(path, 3);
  ASSERT_EQ(d.forests.size(), 3u);
  EXPECT_EQ(d.forests[0].size(), 3u);
  EXPECT_TRUE(d.forests[1].empty());
  EXPECT_TRUE(d.forests[2].empty());
}

TEST(ForestDecomposition, ParallelCopiesOnePerLayer) {
  auto g = EdgeSet::from_pairs(2, {{0, 1}, {0, 1}, {0, 1}});
  auto d = sgs::decompose_forests(g, 2);
  ASSERT_EQ(d.forests.size(), 2u);
  EXPECT_EQ(d.forests[0].size(), 1u);
  EXPECT_EQ(d.forests[1].size(), 1u);
  EXPECT_EQ(d.edge_union().size(), 2u);
}

TEST(ForestDecomposition, LayersAreMaximalForestsOnSimpleGraphs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rng() % 8;
    auto g = oracle::random_graph(rng, n, rng() % 25);
    // drop parallel copies
    EdgeSet simple(n);
    for (const Edge& e : g.edges)
      if (!oracle::has_edge(simple, e.u, e.v)) simple.edges.push_back(e);
    unsigned k = 1 + static_cast<unsigned>(rng() % 4);
    auto d = sgs::decompose_forests(simple, k);
    EdgeSet rest = simple;
    for (const EdgeSet& f : d.forests) {
      sgs::UnionFind uf(n);
      for (const Edge& e : f.edges) EXPECT_TRUE(uf.insert(e));
      // maximal in what is left
      EXPECT_EQ(sgs::components(f), sgs::components(rest));
      std::erase_if(rest.edges, [&](const Edge& e) {
        return std::find(f.edges.begin(), f.edges.end(), e) != f.edges.end();
      });
    }
    EXPECT_LE(d.edge_union().size(), k * n);
  }
}

struct Preservation {
  std::size_t kappa_violations = 0;
  std::size_t lambda_violations = 0;
};

Preservation check_preservation(const EdgeSet& g, const EdgeSet& c, unsigned k, bool vertex) {
  Preservation p;
  auto lg = oracle::capped_lambda_all(g, k);
  auto lc = oracle::capped_lambda_all(c, k);
  for (VertexId x = 0; x < g.n; ++x) {
    for (VertexId y = x + 1; y < g.n; ++y) {
      if (lc[x][y] < lg[x][y]) ++p.lambda_violations;
      if (vertex && oracle::capped_kappa(c, x, y, k) < oracle::capped_kappa(g, x, y, k)) ++p.kappa_violations;
    }
  }
  return p;
}

TEST(KCertificate, PreservesLocalConnectivityOnMultigraphs) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 2 + rng() % 7;
    auto g = oracle::random_graph(rng, n, rng() % 22, 0.3);
    unsigned k = 1 + static_cast<unsigned>(rng() % 3);
    for (auto type : {CertificateType::VertexConnectivity, CertificateType::EdgeConnectivity}) {
      auto c = sgs::build_k_certificate(g, k, type);
      bool vertex = type == CertificateType::VertexConnectivity;
      auto p = check_preservation(g, c.edge_set(), k, vertex);
      EXPECT_EQ(p.kappa_violations, 0u) << "trial " << trial;
      EXPECT_EQ(p.lambda_violations, 0u) << "trial " << trial;
      EXPECT_LE(c.edges.size(), k * n);
    }
  }
}

TEST(KCertificate, DoubledTriangleKeepsLocalConnectivity) {
  // 0=1 twice, 0=2 twice, 1-2 once: two copies of 0-1 and 0-2 are needed
  // for kappa(1, 2) = 2 once 1-2 is gone.
  auto g = EdgeSet::from_pairs(3, {{0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 2}});
  auto c = sgs::build_k_certificate(g, 2);
  auto p = check_preservation(g, c.edge_set(), 2, true);
  EXPECT_EQ(p.kappa_violations, 0u);
  EXPECT_LE(c.edges.size(), 6u);
}

TEST(KCertificate, CertificateOfCertificate) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = 2 + rng() % 7;
    auto g = oracle::random_graph(rng, n, rng() % 20, 0.2);
    unsigned k = 1 + static_cast<unsigned>(rng() % 3);
    auto once = sgs::build_k_certificate(g, k);
    auto twice = sgs::build_k_certificate(once.edge_set(), k);
    auto p = check_preservation(g, twice.edge_set(), k, true);
    EXPECT_EQ(p.kappa_violations + p.lambda_violations, 0u);
  }
}

TEST(KCertificate, CopiesModeStaysWithinKn) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rng() % 10;
    auto g = oracle::random_graph(rng, n, rng() % 60, 0.6);
    unsigned k = 1 + static_cast<unsigned>(rng() % 4);
    auto c = sgs::build_k_certificate(g, k, CertificateType::EdgeConnectivity);
    EXPECT_LE(c.edges.size(), k * n);
  }
}

TEST(KConnKernel, ChargesWithinItsBound) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 2 + rng() % 15;
    auto a = oracle::random_graph(rng, n, rng() % 40, 0.4);
    auto b = oracle::random_graph(rng, n, rng() % 40, 0.4);
    unsigned k = 1 + static_cast<unsigned>(rng() % 4);
    for (auto mode : {sgs::ScanMode::Distinct, sgs::ScanMode::Copies}) {
      for (std::size_t tests : {std::size_t{0}, sgs::prune_tests_per_recompute(k), sgs::kPruneAll}) {
        std::vector<Edge> merged = a.edges;
        std::vector<Edge> group = b.edges;
        auto bound = sgs::kconn_work(n, merged.size(), group.size(), k, mode, tests);
        sgs::Job<bool> job(
            [&](sgs::Meter& m) { return sgs::kconn_kernel(m, {n, merged, group}, k, mode, tests); }, bound, 5);
        job.drain();
        EXPECT_NO_THROW(job.take());
      }
    }
  }
}

TEST(PruneKernel, BudgetLimitsFlowTests) {
  // Ten copies of one edge: an unlimited prune keeps k of them.
  EdgeSet g(2);
  for (int i = 0; i < 10; ++i) g.edges.push_back({0, 1, 0, static_cast<sgs::StreamIndex>(i)});
  auto all = g.edges;
  sgs::run_unmetered<bool>(
      [&](sgs::Meter& m) { return sgs::prune_kernel(m, 2, all, 3, sgs::kPruneAll); });
  EXPECT_EQ(all.size(), 3u);
  auto few = g.edges;
  sgs::run_unmetered<bool>([&](sgs::Meter& m) { return sgs::prune_kernel(m, 2, few, 3, 4); });
  EXPECT_EQ(few.size(), 6u);
  // earliest arrivals survive
  EXPECT_EQ(all.front().index, 0u);
}

}  // namespace
