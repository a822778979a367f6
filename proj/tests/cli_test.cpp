#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef SGS_CLI_PATH
#error "SGS_CLI_PATH must name the sgs binary"
#endif

namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
};

Result sh(const std::string& args) {
  std::string cmd = std::string(SGS_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("sgs_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& body) {
    auto path = dir_ / name;
    std::ofstream(path, std::ios::binary) << body;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, ComponentsJson) {
  auto r = sh("run --problem cc -i " + file("s.txt", "n 5\n0 1\n3 4\n"));
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdicts"][0]["components"], 3);
  EXPECT_EQ(j["verdicts"][0]["labels"], nlohmann::json::array({0, 0, 2, 3, 3}));
  EXPECT_EQ(j["config"]["group_size"], 5);
}

TEST_F(Cli, TreeSeparator) {
  auto r = sh("run --problem kvconn --k 2 --metrics human -i " + file("t.txt", "n 4\n0 1\n1 2\n1 3\n"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2-vertex-connected: no"), std::string::npos);
  EXPECT_NE(r.out.find("separator: 1"), std::string::npos);
}

TEST_F(Cli, MsfTriangle) {
  auto r = sh("run --problem msf -i " + file("w.txt", "n 3 weighted\n0 1 1\n1 2 2\n0 2 3\n"));
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdicts"][0]["total_weight"], 3);
  EXPECT_EQ(j["verdicts"][0]["edges"].size(), 2u);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(sh("run --problem cc -i " + file("bad.txt", "n 3\n0 1\n0 q\n")).code, 2);
  EXPECT_EQ(sh("run --problem msf -i " + file("uw.txt", "n 3\n0 1\n")).code, 2);
  EXPECT_EQ(sh("run --problem cc -i " + file("loop.txt", "n 3\n0 1\n2 2\n")).code, 3);
  EXPECT_EQ(sh("run --problem cc --skip-loops -i " + path("loop.txt")).code, 0);
  EXPECT_EQ(sh("run --problem cc --max-stored-edges 2 -i " + file("tri.txt", "n 3\n0 1\n1 2\n0 2\n")).code, 4);
  EXPECT_EQ(sh("run --problem kvconn -i " + path("tri.txt")).code, 1);
  EXPECT_EQ(sh("run --problem cc -i " + path("missing.txt")).code, 1);
}

TEST_F(Cli, GenerateIsDeterministic) {
  auto a = sh("generate --n 50 --m 200 --seed 4 --weighted");
  auto b = sh("generate --n 50 --m 200 --seed 4 --weighted");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("n 50 weighted\n", 0), 0u);
  auto k5 = sh("generate --n 5 --model complete");
  EXPECT_EQ(std::count(k5.out.begin(), k5.out.end(), '\n'), 11);
  EXPECT_EQ(sh("generate --n 5 --m 11 --model complete").code, 1);
}

TEST_F(Cli, ConvertRoundTrip) {
  ASSERT_EQ(sh("generate --n 40 --m 100 --seed 2 --weighted -o " + path("a.txt")).code, 0);
  ASSERT_EQ(sh("convert -i " + path("a.txt") + " -o " + path("a.bin")).code, 0);
  ASSERT_EQ(sh("convert --format text -i " + path("a.bin") + " -o " + path("b.txt")).code, 0);
  std::ifstream a(path("a.txt")), b(path("b.txt"));
  std::string sa((std::istreambuf_iterator<char>(a)), {}), sb((std::istreambuf_iterator<char>(b)), {});
  EXPECT_EQ(sa, sb);
  auto text = sh("run --problem msf -i " + path("a.txt"));
  auto bin = sh("run --problem msf -i " + path("a.bin"));
  EXPECT_EQ(text.out, bin.out);
}

}  // namespace
