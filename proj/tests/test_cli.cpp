#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hfree/cli.hpp"
#include "hfree/named_graphs.hpp"

using namespace hfree;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("hfree_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, Classify) {
  auto r = run({"classify", "--pattern", file("s4.txt", write_graph(graphs::star(4)))});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "class=Star params=4 witness=-\n");
  r = run({"classify", "--pattern", file("paw.txt", write_graph(graphs::paw()))});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("class=Unsupported", 0), 0u);
}

TEST_F(CliTest, Solve) {
  const std::string p3 = file("p3.txt", write_graph(graphs::path(3)));
  auto r = run({"solve", "--instance", file("c5k2.txt", write_instance({graphs::cycle(5), 2})), "--pattern", p3});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "no\n");
  r = run({"solve", "--instance", file("c5k3.txt", write_instance({graphs::cycle(5), 3})), "--pattern", p3});
  EXPECT_EQ(r.out.rfind("yes e ", 0), 0u);
}

TEST_F(CliTest, PlanThenReduce) {
  const std::string plan_path = path("s4.plan");
  auto r = run({"plan", "--pattern", file("s4.txt", write_graph(graphs::star(4))), "--out", plan_path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  r = run({"reduce", "--plan", plan_path, "--instance", file("p4.txt", write_instance({graphs::path(4), 1}))});
  ASSERT_EQ(r.code, 0) << r.err;
  const Instance out = parse_instance(r.out);
  EXPECT_EQ(out.graph.vertex_count(), 36u);
  EXPECT_EQ(out.budget, 1u);
}

TEST_F(CliTest, PlanUnsupported) {
  auto r = run({"plan", "--pattern", file("paw.txt", write_graph(graphs::paw()))});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("class=Unsupported"), std::string::npos);
}

TEST_F(CliTest, Verify) {
  auto r = run({"verify", "--suite", "star-step", "--n", "4", "--k", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("suite=star-step"), std::string::npos);
  EXPECT_NE(r.out.find("status=pass"), std::string::npos);
}

TEST_F(CliTest, FuzzIsDeterministic) {
  std::vector<std::string> args{"fuzz", "--suite", "copy-step", "--n", "5", "--k", "2", "--seed", "4", "--count", "20"};
  auto a = run(args);
  auto b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"fuzz", "--suite", "gadget-structure"}).code, 2);
}

TEST_F(CliTest, Errors) {
  auto r = run({});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error:", 0), 0u);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"classify"}).code, 2);
  EXPECT_EQ(run({"classify", "--pattern", path("missing.txt")}).code, 1);
  r = run({"classify", "--pattern", file("bad.txt", "p edge 2 1\ne 1 3\n")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error:", 0), 0u);
  EXPECT_EQ(run({"reduce", "--plan", file("bad.plan", "base x\n"), "--instance", file("i.txt", "p edge 1 0\nk 1\n")}).code, 1);
  // budget 0 cannot be reduced
  r = run({"plan", "--pattern", file("s3.txt", write_graph(graphs::star(3))), "--out", path("s3.plan")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(run({"reduce", "--plan", path("s3.plan"), "--instance", file("k0.txt", write_instance({graphs::path(3), 0}))}).code, 1);
}
