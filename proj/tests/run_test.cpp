#include <gtest/gtest.h>

#include <sstream>
#include <variant>

#include "sgs/run.hpp"

namespace {

using sgs::Problem;
using sgs::RunOptions;

sgs::RunReport run(const std::string& text, std::vector<Problem> problems, unsigned k = 0) {
  std::istringstream in(text);
  RunOptions opt;
  opt.problems = std::move(problems);
  opt.k = k;
  return sgs::run_stream(in, opt);
}

TEST(ParseProblems, AcceptsSingleAndSharedPass) {
  EXPECT_EQ(sgs::parse_problems("cc"), std::vector<Problem>{Problem::Components});
  EXPECT_EQ(sgs::parse_problems("kvconn,keconn"),
            (std::vector<Problem>{Problem::VertexConnectivity, Problem::EdgeConnectivity}));
  EXPECT_THROW(sgs::parse_problems("cc,msf"), std::invalid_argument);
  EXPECT_THROW(sgs::parse_problems("kvconn,kvconn"), std::invalid_argument);
  EXPECT_THROW(sgs::parse_problems("triangles"), std::invalid_argument);
  EXPECT_THROW(sgs::parse_problems(""), std::invalid_argument);
}

TEST(RunStream, TwoComponents) {
  auto r = run("n 5\n0 1\n1 2\n3 4\n", {Problem::Components});
  auto& v = std::get<sgs::ComponentsVerdict>(r.verdicts.at(0));
  EXPECT_EQ(v.count, 2u);
  EXPECT_EQ(v.labels, (std::vector<sgs::VertexId>{0, 0, 0, 3, 3}));
  EXPECT_EQ(r.metrics.total_edges, 3u);
}

TEST(RunStream, TreeIsNotTwoConnected) {
  auto r = run("n 4\n0 1\n1 2\n1 3\n", {Problem::VertexConnectivity}, 2);
  auto& v = std::get<sgs::ConnectivityVerdict>(r.verdicts.at(0));
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(v.witness->vertices, std::vector<sgs::VertexId>{1});
}

TEST(RunStream, MsfTriangle) {
  auto r = run("n 3 weighted\n0 1 1\n1 2 2\n0 2 3\n", {Problem::Msf});
  auto& v = std::get<sgs::MsfVerdict>(r.verdicts.at(0));
  EXPECT_EQ(v.total_weight, 3u);
  EXPECT_EQ(v.edges.size(), 2u);
}

TEST(RunStream, Errors) {
  EXPECT_THROW(run("n 3\n0 1\n", {Problem::Msf}), sgs::FormatError);
  EXPECT_THROW(run("n 3\n0 1\n", {Problem::VertexConnectivity}), std::invalid_argument);
  try {
    run("n 3\n0 1\n2 2\n", {Problem::Components});
    FAIL();
  } catch (const sgs::LoopEdgeError& e) {
    EXPECT_EQ(e.position(), 3u);
    EXPECT_EQ(e.vertex(), 2u);
  }
}

TEST(RunStream, SkipLoops) {
  std::istringstream in("n 3\n0 1\n2 2\n1 2\n");
  RunOptions opt;
  opt.skip_loops = true;
  auto r = sgs::run_stream(in, opt);
  EXPECT_EQ(r.skipped_loops, 1u);
  EXPECT_EQ(std::get<sgs::ComponentsVerdict>(r.verdicts.at(0)).count, 1u);
}

TEST(RunStream, SharedPassAnswersBoth) {
  auto r = run("n 4\n0 1\n1 2\n2 3\n3 0\n", {Problem::VertexConnectivity, Problem::EdgeConnectivity}, 2);
  ASSERT_EQ(r.verdicts.size(), 2u);
  EXPECT_TRUE(std::get<sgs::ConnectivityVerdict>(r.verdicts[0]).holds);
  EXPECT_TRUE(std::get<sgs::ConnectivityVerdict>(r.verdicts[1]).holds);
}

TEST(Report, JsonIsDeterministic) {
  const std::string text = "n 6\n0 1\n1 2\n2 0\n3 4\n";
  auto a = sgs::to_json(run(text, {Problem::Bipartite}));
  auto b = sgs::to_json(run(text, {Problem::Bipartite}));
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["verdicts"][0]["bipartite"], false);
  EXPECT_EQ(a["verdicts"][0]["odd_cycle"], nlohmann::json::array({0, 1, 2, 0}));
  for (const char* key : {"peak_stored_edges", "max_work_units", "mean_work_units", "recompute_count"}) {
    EXPECT_TRUE(a["metrics"].contains(key)) << key;
  }
}

TEST(Report, Human) {
  auto h = sgs::to_human(run("n 3 weighted\n0 1 1\n1 2 2\n0 2 3\n", {Problem::Msf}));
  EXPECT_NE(h.find("msf weight: 3"), std::string::npos);
  EXPECT_NE(h.find("peak stored edges"), std::string::npos);
}

}  // namespace
