#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "horn/cli.hpp"
#include "horn/dimacs.hpp"
#include "horn/experiment.hpp"
#include "horn/sweep_config.hpp"

using namespace horn;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run_command(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("horn_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

const char* kFigure1 = "p cnf 4 4\n1 -2 -3 0\n2 -3 -4 0\n3 -1 0\n1 0\n";

}  // namespace

TEST_F(CliTest, SolveFigure1) {
  std::string file = write("fig1.cnf", kFigure1);
  for (const char* algo : {"ppur", "gp", "pur"}) {
    CliRun r = run({"solve", "--algo", algo, file});
    EXPECT_EQ(r.code, kExitSat) << algo;
    EXPECT_EQ(r.out, "SAT\nh 2\n1\n3\n") << algo;
  }
  CliRun par = run({"solve", "--algo", "ppur", "--parallel", file});
  EXPECT_EQ(par.out, "SAT\nh 2\n1\n3\n");
}

TEST_F(CliTest, SolveUnsatFromStdin) {
  CliRun r = run({"solve", "--algo", "gp", "-"}, "p cnf 2 3\n1 0\n2 -1 0\n-2 0\n");
  EXPECT_EQ(r.code, kExitUnsat);
  EXPECT_EQ(r.out, "UNSAT\nh 1\n");
}

TEST_F(CliTest, SolveErrors) {
  EXPECT_EQ(run({"solve", (dir_ / "missing.cnf").string()}).code, kExitIo);
  EXPECT_EQ(run({"solve", write("bad.cnf", "p cnf 2 1\n1 2 0\n")}).code, kExitIo);
  EXPECT_EQ(run({"solve", "--algo", "cdcl", write("ok.cnf", kFigure1)}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--bogus", write("ok2.cnf", kFigure1)}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
}

TEST_F(CliTest, HelpExitsZero) {
  CliRun r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("solve"), std::string::npos);
}

TEST_F(CliTest, GenIsDeterministicAndParses) {
  std::vector<std::string> args{"gen", "--n", "50", "--d1", "0.1", "--d3", "2", "--seed", "4"};
  CliRun a = run(args), b = run(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  HornFormula f = parse_dimacs(a.out);
  EXPECT_EQ(f.num_vars(), 50u);
  EXPECT_EQ(f.num_clauses(), 1u + 5u + 100u);

  args.push_back("--normalize");
  EXPECT_LE(parse_dimacs(run(args).out).num_clauses(), f.num_clauses());
  EXPECT_EQ(run({"gen", "--n", "50", "--d1", "1.5", "--d3", "2", "--seed", "4"}).code, kExitUsage);
}

TEST_F(CliTest, GenSolvePipelineDeterministic) {
  std::string cnf = (dir_ / "g.cnf").string();
  ASSERT_EQ(run({"gen", "--n", "2000", "--d1", "0.1", "--d3", "1.8", "--seed", "3", "-o", cnf}).code,
            kExitOk);
  CliRun a = run({"solve", "--algo", "ppur", cnf}), b = run({"solve", "--algo", "ppur", cnf});
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(a.code == kExitSat || a.code == kExitUnsat);
}

TEST_F(CliTest, ReduceOutputIs3Cnf) {
  std::string file = write("long.cnf", "p cnf 6 2\n1 -2 -3 -4 -5 -6 0\n-1 -2 -3 -4 0\n");
  CliRun r = run({"reduce", file});
  EXPECT_EQ(r.code, kExitOk);
  HornFormula f = parse_dimacs(r.out);
  EXPECT_EQ(f.num_vars(), 6u + 3u + 1u);
  EXPECT_EQ(f.num_clauses(), 4u + 2u);
  for (ClauseId c = 0; c < f.num_clauses(); ++c) EXPECT_LE(f.clause(c).size(), 3u);
}

TEST_F(CliTest, PredictAndCritical) {
  CliRun p = run({"predict", "--n", "1000", "--d1", "0", "--d3", "5"});
  EXPECT_EQ(p.code, kExitOk);
  EXPECT_EQ(p.out, "0\n");
  EXPECT_EQ(run({"predict", "--n", "1e6", "--d1", "0.1", "--d3", "1.8"}).out, "12\n");

  CliRun capped = run({"predict", "--n", "1e6", "--d1", "0.3", "--d3", "1.8", "--max-iters", "2"});
  EXPECT_EQ(capped.code, kExitNonTerm);

  CliRun c = run({"critical", "--d3", "3.0"});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_EQ(c.out, "0.0983\n");
  EXPECT_EQ(run({"critical", "--d3", "2", "--digits", "5"}).out, "0.17564\n");
  EXPECT_EQ(run({"critical", "--d3", "1.9"}).code, kExitUsage);
}

TEST_F(CliTest, SweepAndFit) {
  std::string cfg = write("grid.cfg",
                          "# small grid\n"
                          "n = 2^8, 2^9, 2^10\n"
                          "d1 = 0.1, critical+0.05\n"
                          "d3 = 3.0\n"
                          "algo = ppur\n"
                          "trials = 4\n"
                          "seed = 10\n");
  std::string csv1 = (dir_ / "a.csv").string(), csv2 = (dir_ / "b.csv").string();
  ASSERT_EQ(run({"sweep", "--config", cfg, "--out", csv1}).code, kExitOk);
  ASSERT_EQ(run({"sweep", "--config", cfg, "--out", csv2, "--threads", "2"}).code, kExitOk);
  std::stringstream a, b;
  a << std::ifstream(csv1).rdbuf();
  b << std::ifstream(csv2).rdbuf();
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')), kCsvHeader);
  std::istringstream is(a.str());
  EXPECT_EQ(read_csv(is).size(), 3u * 2u * 4u);

  CliRun fit = run({"fit", "--model", "logn", csv1});
  EXPECT_EQ(fit.code, kExitOk);
  EXPECT_EQ(std::count(fit.out.begin(), fit.out.end(), '\n'), 3);
  EXPECT_EQ(fit.out.rfind("d3,d1,algo,points,slope,intercept,r_squared\n", 0), 0u);
}

TEST_F(CliTest, SweepConfigErrors) {
  EXPECT_EQ(run({"sweep", "--config", write("bad.cfg", "n = 10\nd1 = 0.1\nd3 = 1\nfoo = 1\n")}).code,
            kExitIo);
  EXPECT_EQ(run({"sweep", "--config", (dir_ / "nope.cfg").string()}).code, kExitIo);
}

TEST(SweepConfig, Grammar) {
  SweepConfig c = parse_sweep_config(
      "n = 2^12, 1e5, 300  # trailing comment\n"
      "d1 = 0.05, critical, critical - 0.01\n"
      "d3 = 3\n"
      "algo = predict\n"
      "trials = 7\nseed = 42\nmax_iters = 100\ntiming = true\noptional_step = no\n");
  EXPECT_EQ(c.grid.n, (std::vector<std::size_t>{4096, 100000, 300}));
  ASSERT_EQ(c.grid.d1.size(), 3u);
  EXPECT_FALSE(c.grid.d1[0].relative_to_critical);
  EXPECT_TRUE(c.grid.d1[1].relative_to_critical);
  EXPECT_EQ(c.grid.d1[1].value, 0.0);
  EXPECT_EQ(c.grid.d1[2].value, -0.01);
  EXPECT_EQ(c.algo, Algo::PREDICT);
  EXPECT_EQ(c.trials, 7u);
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.options.max_iters, 100u);
  EXPECT_TRUE(c.options.timing);
  EXPECT_FALSE(c.options.gp_optional_step);

  EXPECT_THROW(parse_sweep_config("d1 = 0.1\nd3 = 1\n"), Error);
  EXPECT_THROW(parse_sweep_config("n = 1.5\nd1 = 0.1\nd3 = 1\n"), Error);
  EXPECT_THROW(parse_sweep_config("n = 10\nd1 = criticalx\nd3 = 1\n"), Error);
  EXPECT_THROW(parse_sweep_config("n = 10\nn = 20\nd1 = 0.1\nd3 = 1\n"), Error);
  EXPECT_THROW(parse_sweep_config("n = 10\nd1 = 0.1\nd3 = 1\nalgo = dpll\n"), Error);
}
