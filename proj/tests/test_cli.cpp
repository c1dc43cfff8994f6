#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "avcs/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code = 0;
  std::string out, err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("avcs_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string config(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / (name + ".cfg");
    std::ofstream(p) << text;
    return p.string();
  }

  Invocation run(std::vector<std::string> args) {
    args.insert(args.begin(), "avcs_cli");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Invocation r;
    r.code = avcs::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
  }

  fs::path dir_;
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_F(Cli, GenWritesTopologyHeader) {
  const Invocation r = run({"--config", config("grid", "deployment = grid\n"), "gen"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out)[0].rfind("nodes 400 ", 0), 0u);
}

TEST_F(Cli, GenWithHole) {
  const Invocation r = run({"--config", config("hole", "voids = disc 9.5 9.5 3.1\n"), "gen"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out)[0].rfind("nodes 371 ", 0), 0u);
}

TEST_F(Cli, GenToFile) {
  const std::string out = (dir_ / "topo.txt").string();
  const Invocation r = run({"--config", config("grid", "rows = 3\ncols = 3\n"), "--out", out, "gen"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "nodes 9 width 3.000000 height 3.000000 range 1.000000");
}

TEST_F(Cli, MalformedKeyNamesLine) {
  const Invocation r = run({"--config", config("bad", "rows = 4\nbogus = 1\n"), "gen"});
  EXPECT_NE(r.code, 0);
  EXPECT_EQ(r.err, "error: config: line 2: unknown key 'bogus'\n");
}

TEST_F(Cli, MissingConfigFile) {
  const Invocation r = run({"--config", (dir_ / "nope.cfg").string(), "gen"});
  EXPECT_NE(r.code, 0);
  EXPECT_EQ(lines(r.err).size(), 1u);
  EXPECT_EQ(r.err.rfind("error: io: ", 0), 0u);
}

TEST_F(Cli, UsageErrorsAreSingleLine) {
  const Invocation r = run({"--config", config("grid", "rows = 3\n"), "route", "--src", "0"});
  EXPECT_EQ(r.code, avcs::cli::kError);
  EXPECT_EQ(lines(r.err).size(), 1u);
  EXPECT_EQ(r.err.rfind("error: usage: ", 0), 0u);
}

TEST_F(Cli, RouteToSelf) {
  const Invocation r = run({"--config", config("grid", "protocol = gf-geo\n"), "route", "--src", "5", "--dst", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 5 source 0.000000\n");
}

TEST_F(Cli, RouteGreedyTrace) {
  const Invocation r = run({"--config", config("grid", "rows = 3\ncols = 3\nprotocol = gf-geo\n"), "route", "--src", "0",
                     "--dst", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0 0 source 2.000000\n1 1 greedy 1.000000\n2 2 greedy 0.000000\n");
}

TEST_F(Cli, CounterexampleFailsUnderGreedy) {
  for (const char* distance : {"euclid", "manhattan"}) {
    const std::string cfg = config(std::string("abc_") + distance, std::string("deployment = fixture_abc\nprotocol = gf-vcs\n"
                                                                               "distance = ") + distance + "\n");
    const Invocation r = run({"--config", cfg, "route", "--src", "2", "--dst", "0"});
    EXPECT_EQ(r.code, avcs::cli::kLocalMinimum) << distance;
    EXPECT_EQ(r.err, "error: route: local-minimum\n");
    EXPECT_EQ(lines(r.out).size(), 1u);
  }
}

TEST_F(Cli, CounterexampleDeliversUnderLcr) {
  const Invocation r = run({"--config", config("abc", "deployment = fixture_abc\nprotocol = lcr\nalign_depth = 0\n"), "route",
                     "--src", "2", "--dst", "0"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find(" backtrack "), std::string::npos);
  EXPECT_EQ(lines(r.out).back().rfind("2 0 greedy 0.000000", 0), 0u);
}

TEST_F(Cli, TtlExitCode) {
  const Invocation r = run({"--config", config("tiny", "protocol = gf-geo\nttl_factor = 0.1\n"), "route", "--src", "0",
                     "--dst", "399"});
  EXPECT_EQ(r.code, avcs::cli::kTtlExceeded);
  EXPECT_EQ(r.err, "error: route: ttl-exceeded\n");
}

TEST_F(Cli, EvalGeoGrid) {
  const Invocation r = run({"--config", config("geo", "protocol = gf-geo\n"), "--sample", "0", "eval"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0], avcs::kMetricsHeader);
  EXPECT_EQ(l[1], "geo,gf-geo,geo,geo,0,3.800000,159600,1.000000,1.000000,1.000000,1.000000,nan");
}

TEST_F(Cli, EvalIsByteIdenticalAcrossRunsAndWorkers) {
  const std::string cfg = config("rand", "deployment = random\nradio_range = degree:10\nprotocol = gf-vcs\nseed = 1\n");
  const Invocation a = run({"--config", cfg, "--sample", "5000", "eval"});
  const Invocation b = run({"--config", cfg, "--sample", "5000", "eval"});
  const Invocation c = run({"--config", cfg, "--sample", "5000", "--workers", "4", "eval"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST_F(Cli, SweepDepthRows) {
  const Invocation r = run({"--config", config("depth", "radio_range = 1.5\n"), "--sample", "2000", "sweep", "--axis",
                     "align_depth", "--values", "0,1,2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 5u);
}

TEST_F(Cli, SweepUnknownAxis) {
  const Invocation r = run({"--config", config("depth", "rows = 4\n"), "sweep", "--axis", "colour", "--values", "1"});
  EXPECT_EQ(r.code, avcs::cli::kError);
  EXPECT_EQ(r.err, "error: config: unknown sweep axis 'colour'\n");
}

TEST_F(Cli, MapHasOneRowPerNode) {
  const Invocation r = run({"--config", config("map", "radio_range = 2.3\nanchors = 200 10 219 390\n"), "map", "--dst", "162"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 401u);
  EXPECT_EQ(l[0], "x,y,dist,is_local_min");
  EXPECT_EQ(l[163], "2.500000,8.500000,0.000000,0");
  int zero = 0;
  for (std::size_t i = 1; i < l.size(); ++i) zero += l[i].find(",0.000000,") != std::string::npos;
  EXPECT_EQ(zero, 1);
}

TEST_F(Cli, CoordsOutput) {
  const Invocation r = run({"--config", config("c", "rows = 3\ncols = 3\nalign_depth = 0\n"), "coords"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 10u);
  EXPECT_EQ(l[0], "# depth 0 rule uniform-average anchors 0 2 8 6");
  EXPECT_EQ(l[5], "4 2.000000 2.000000 2.000000 2.000000");
}

TEST_F(Cli, UnreachableAnchorIsScenarioError) {
  const Invocation r = run({"--config", config("cut", "radio_range = 0.5\nprotocol = gf-vcs\n"), "eval"});
  EXPECT_EQ(r.code, avcs::cli::kError);
  EXPECT_EQ(r.err.rfind("error: scenario: ", 0), 0u);
}
