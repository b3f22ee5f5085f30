#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "mimicnet/graph_io.hpp"

namespace mimicnet::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Outcome r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mimicnet_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

TEST_F(Cli, GenerateAndVerifyUniqueCycles) {
  ASSERT_EQ(run({"gen", "planar", "--k", "4", "--out", path("p4")}).code, kExitOk);
  const Outcome r = run({"verify", "unique-cycles", "--instance", path("p4")});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "4/4 important cuts unique")) << r.out;
}

TEST_F(Cli, RankOfImportantRows) {
  ASSERT_EQ(run({"gen", "planar", "--k", "5", "--out", path("p5")}).code, kExitOk);
  const Outcome r = run({"rank", "--instance", path("p5"), "--rows", "important-only", "--strict"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "rank 8")) << r.out;
}

TEST_F(Cli, EveryVerifierPassesOnSmallInstances) {
  ASSERT_EQ(run({"gen", "planar", "--k", "3", "--out", path("p3")}).code, kExitOk);
  for (const std::string check : {"claim-paths", "unique-cycles", "identity-submatrix", "structure"}) {
    const Outcome r = run({"verify", check, "--instance", path("p3")});
    EXPECT_EQ(r.code, kExitOk) << check << "\n" << r.out << r.err;
  }
}

TEST_F(Cli, WrongBundleKindIsAUsageError) {
  ASSERT_EQ(run({"gen", "planar", "--k", "3", "--out", path("p3")}).code, kExitOk);
  const Outcome r = run({"verify", "side-assignment", "--instance", path("p3")});
  EXPECT_EQ(r.code, kExitUsage) << r.out << r.err;
}

TEST_F(Cli, GraphCommands) {
  ASSERT_EQ(run({"gen", "planar", "--k", "4", "--out", path("p4")}).code, kExitOk);
  const std::string primal = path("p4/primal.graph");

  const Outcome cut = run({"mincut", "--graph", primal, "--side", "fn,f1", "--witness"});
  EXPECT_EQ(cut.code, kExitOk) << cut.err;
  EXPECT_TRUE(contains(cut.out, "value 73/1")) << cut.out;

  const Outcome same = run({"validate", "--original", primal, "--compressed", primal});
  EXPECT_EQ(same.code, kExitOk) << same.out << same.err;

  ASSERT_EQ(run({"compress", "--graph", primal, "--out", path("small.graph")}).code, kExitOk);
  const Outcome ok = run({"validate", "--original", primal, "--compressed", path("small.graph")});
  EXPECT_EQ(ok.code, kExitOk) << ok.out << ok.err;

  const Outcome dot = run({"export", "dot", "--graph", primal});
  EXPECT_EQ(dot.code, kExitOk);
  EXPECT_TRUE(contains(dot.out, "graph ")) << dot.out;
}

TEST_F(Cli, ValidateReportsMismatch) {
  write_text_file(path("a.graph"),
                  "mimicnet-graph 1\nvertices 2\nv s\nv t\nterminals 2\nt s\nt t\nedges 1\ne s t 1/1\nend\n");
  write_text_file(path("b.graph"),
                  "mimicnet-graph 1\nvertices 2\nv s\nv t\nterminals 2\nt s\nt t\nedges 1\ne s t 2/1\nend\n");
  const Outcome r = run({"validate", "--original", path("a.graph"), "--compressed", path("b.graph")});
  EXPECT_EQ(r.code, kExitFailed) << r.out << r.err;
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "planar"}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "planar", "--k", "2", "--out", path("bad")}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "dblexp", "--r", "3", "--out", path("bad")}).code, kExitUsage);
  EXPECT_EQ(run({"gen", "dblexp", "--r", "6", "--out", path("bad")}).code, kExitUsage);
  EXPECT_EQ(run({"mincut", "--graph", path("missing.graph"), "--side", "a"}).code, kExitUsage);
  EXPECT_EQ(run({"rank", "--rows", "important-only"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(Cli, OutputIsDeterministicAcrossRunsAndJobs) {
  ASSERT_EQ(run({"gen", "planar", "--k", "5", "--out", path("a")}).code, kExitOk);
  ASSERT_EQ(run({"gen", "planar", "--k", "5", "--out", path("b")}).code, kExitOk);
  for (const char* member : {"dual.graph", "primal.graph", "meta"}) {
    EXPECT_EQ(read_text_file(dir_ / "a" / member), read_text_file(dir_ / "b" / member)) << member;
  }
  const std::string primal = path("a/primal.graph");
  const Outcome one = run({"profile", "--graph", primal, "--uniqueness", "--jobs", "1"});
  const Outcome two = run({"profile", "--graph", primal, "--uniqueness", "--jobs", "2"});
  ASSERT_EQ(one.code, kExitOk);
  EXPECT_EQ(one.out, two.out);
  const Outcome v1 = run({"verify", "unique-cycles", "--instance", path("a"), "--jobs", "1"});
  const Outcome v2 = run({"verify", "unique-cycles", "--instance", path("a"), "--jobs", "3"});
  EXPECT_EQ(v1.out, v2.out);
}

TEST_F(Cli, DblExpSideAssignment) {
  ASSERT_EQ(run({"gen", "dblexp", "--r", "2", "--out", path("d")}).code, kExitOk);
  const Outcome r = run({"verify", "side-assignment", "--instance", path("d"), "--jobs", "2"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "10 important sets, 2520 w_Z decisions, 0 mismatches")) << r.out;
}

}  // namespace
}  // namespace mimicnet::cli
