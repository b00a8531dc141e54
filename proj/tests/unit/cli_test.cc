#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct Invocation {
  int status;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("parimutuel_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Invocation run(const std::string& args) {
    const auto out = dir_ / "stdout", err = dir_ / "stderr";
    const std::string cmd = std::string(PARIMUTUEL_CLI_PATH) + " " + args + " >" + out.string() +
                            " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
  }

  fs::path write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
    return dir_ / name;
  }

  static std::string scenario(const std::string& file) {
    return (fs::path(PARIMUTUEL_SCENARIO_DIR) / file).string();
  }

  fs::path dir_;
};

TEST_F(Cli, SolveSymmetric) {
  const auto r = run("solve --scenario " + scenario("symmetric.cfg"));
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("symmetric,0.8,0.5,1,ok,0.5,"), std::string::npos) << r.out;
}

TEST_F(Cli, NoEquilibriumExitsTwo) {
  const auto cfg = write("half.cfg", R"({"name": "half", "measure": {"kind": "uniform"},
    "q": 0.5, "w": 1, "kappa": 0.5})");
  const auto r = run("solve --scenario " + cfg.string());
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("no equilibrium: kappa must exceed 0.5"), std::string::npos) << r.err;
}

TEST_F(Cli, MalformedConfigExitsOne) {
  const auto cfg = write("bad.cfg", "{\n  \"name\": \"bad\",\n  \"q\": oops\n}");
  const auto r = run("solve --scenario " + cfg.string());
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("bad.cfg:3:"), std::string::npos) << r.err;
}

TEST_F(Cli, MissingScenarioFlagExitsOne) {
  EXPECT_EQ(run("solve").status, 1);
  EXPECT_EQ(run("--help").status, 0);
}

TEST_F(Cli, SweepIsByteIdenticalAcrossRuns) {
  const auto a = dir_ / "a.csv", b = dir_ / "b.csv";
  const std::string args = "sweep --baseline --scenario " + scenario("example3.cfg") + " --out ";
  ASSERT_EQ(run(args + a.string()).status, 0);
  ASSERT_EQ(run(args + b.string()).status, 0);
  const auto first = slurp(a);
  EXPECT_FALSE(first.empty());
  EXPECT_EQ(first, slurp(b));
}

TEST_F(Cli, OptimizeTakeWritesProfile) {
  const auto profile = dir_ / "profile.csv";
  const auto r = run("optimize-take --grid 32 --scenario " + scenario("example4_case2.cfg") +
                     " --out " + profile.string());
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("name,q,w,kappa_star,revenue_star"), std::string::npos);
  const auto text = slurp(profile);
  EXPECT_NE(text.find("kappa,house_revenue"), std::string::npos);
}

TEST_F(Cli, OracleReportsGap) {
  const auto r = run("oracle --n 500 --scenario " + scenario("symmetric.cfg"));
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_NE(r.out.find("name,kappa,n,p_approx,p_star,gap,converged,iterations"), std::string::npos);
}

}  // namespace
