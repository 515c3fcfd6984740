#include "horn/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <omp.h>

#include "horn/dimacs.hpp"
#include "horn/experiment.hpp"
#include "horn/meanfield.hpp"
#include "horn/randgen.hpp"
#include "horn/solver.hpp"
#include "horn/sweep_config.hpp"

namespace horn {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HornFormula read_formula(const std::string& path, std::istream& in) {
  if (path == "-") return parse_dimacs(in);
  std::ifstream file(path);
  if (!file) throw IoError("cannot open " + path);
  return parse_dimacs(file);
}

// Writes to `out` for "-" or an empty path, else to the named file.
template <typename Fn>
void write_output(const std::string& path, std::ostream& out, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write " + path);
  fn(file);
  if (!file) throw IoError("write failed: " + path);
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Horn-SAT unit resolution toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Sample a random 1-3-Horn formula as DIMACS");
  ModelParams gen_params;
  bool gen_normalize = false;
  std::string gen_out;
  gen->add_option("--n", gen_params.n, "Variable count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--d1", gen_params.d1, "Positive unit density")->required();
  gen->add_option("--d3", gen_params.d3, "3-clause density")->required();
  gen->add_option("--seed", gen_params.seed, "RNG seed")->required();
  gen->add_flag("--normalize", gen_normalize, "Drop duplicate clauses");
  gen->add_option("--out,-o", gen_out, "Output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve a Horn formula");
  std::string solve_algo = "ppur", solve_file;
  bool solve_optional = false, solve_parallel = false;
  solve->add_option("--algo", solve_algo, "gp | ppur | pur")
      ->check(CLI::IsMember({"gp", "ppur", "pur"}));
  solve->add_flag("--optional-step", solve_optional, "GP: stop once no positive unit remains");
  solve->add_flag("--parallel", solve_parallel, "Run each round's kernel with OpenMP");
  solve->add_option("file", solve_file, "DIMACS file, - for stdin")->required();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Rewrite a Horn formula as 3CNF");
  std::string reduce_file, reduce_out;
  reduce->add_option("file", reduce_file, "DIMACS file, - for stdin")->required();
  reduce->add_option("--out,-o", reduce_out, "Output file (default stdout)");

  // predict
  auto* predict = app.add_subcommand("predict", "Mean-field prediction of the PPUR depth h");
  double pred_n = 0, pred_d1 = 0, pred_d3 = 0;
  std::uint64_t pred_max = kDefaultMaxIters;
  predict->add_option("--n", pred_n)->required();
  predict->add_option("--d1", pred_d1)->required();
  predict->add_option("--d3", pred_d3)->required();
  predict->add_option("--max-iters", pred_max, "Iteration cap")->capture_default_str();

  // critical
  auto* critical = app.add_subcommand("critical", "Critical unit density d1* for d3 >= 2");
  double crit_d3 = 0;
  int crit_digits = 4;
  critical->add_option("--d3", crit_d3)->required();
  critical->add_option("--digits", crit_digits, "Decimal places")
      ->capture_default_str()
      ->check(CLI::Range(0, 17));

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Run an experiment grid, write CSV");
  std::string sweep_config, sweep_out;
  int sweep_threads = 0;
  sweep_cmd->add_option("--config", sweep_config, "key = value grid file")->required();
  sweep_cmd->add_option("--out,-o", sweep_out, "CSV output (default stdout)");
  sweep_cmd->add_option("--threads", sweep_threads, "OpenMP threads (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  // fit
  auto* fit = app.add_subcommand("fit", "Least-squares scaling fit per (d3, d1, algo) group");
  std::string fit_model = "logn", fit_file;
  fit->add_option("--model", fit_model, "logn: h ~ ln n, powerlaw: ln h ~ ln n")
      ->check(CLI::IsMember({"logn", "powerlaw"}));
  fit->add_option("file", fit_file, "Experiment CSV, - for stdin")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) {
      HornFormula f = generate(gen_params);
      if (gen_normalize) f = normalize(f);
      write_output(gen_out, out, [&](std::ostream& os) { emit_dimacs(f, os); });
      return kExitOk;
    }

    if (*solve) {
      HornFormula f = read_formula(solve_file, in);
      const Execution exec = solve_parallel ? Execution::Parallel : Execution::Sequential;
      SolveOutcome r = solve_algo == "gp"     ? solve_gp(f, solve_optional, exec)
                       : solve_algo == "ppur" ? solve_ppur(f, exec)
                                              : solve_pur_serial(f);
      out << to_string(r.status) << '\n' << "h " << r.rounds << '\n';
      for (Var v : r.true_vars()) out << v << '\n';
      return r.status == Status::Sat ? kExitSat : kExitUnsat;
    }

    if (*reduce) {
      HornFormula f = read_formula(reduce_file, in);
      Reduction red = reduce_to_3cnf(f);
      write_output(reduce_out, out, [&](std::ostream& os) { emit_dimacs(red.formula, os); });
      return kExitOk;
    }

    if (*predict) {
      Prediction p = predict_h(pred_n, pred_d1, pred_d3, pred_max);
      out << p.h << '\n';
      if (!p.terminated) {
        err << "predict: no convergence within " << pred_max << " iterations\n";
        return kExitNonTerm;
      }
      return kExitOk;
    }

    if (*critical) {
      out << fixed(critical_d1(crit_d3), crit_digits) << '\n';
      return kExitOk;
    }

    if (*sweep_cmd) {
      std::ifstream cfg_file(sweep_config);
      if (!cfg_file) throw IoError("cannot open " + sweep_config);
      SweepConfig cfg = parse_sweep_config(cfg_file);
      if (sweep_threads > 0) omp_set_num_threads(sweep_threads);
      write_output(sweep_out, out, [&](std::ostream& os) {
        os << kCsvHeader << '\n';
        sweep(cfg.grid, cfg.algo, cfg.trials, cfg.seed, cfg.options,
              [&](const ExperimentRecord& r) { os << to_csv_row(r) << '\n'; });
      });
      return kExitOk;
    }

    if (*fit) {
      std::vector<ExperimentRecord> records;
      if (fit_file == "-") {
        records = read_csv(in);
      } else {
        std::ifstream file(fit_file);
        if (!file) throw IoError("cannot open " + fit_file);
        records = read_csv(file);
      }
      const FitModel model = fit_model == "logn" ? FitModel::HVsLogN : FitModel::LogHVsLogN;
      out << "d3,d1,algo,points,slope,intercept,r_squared\n";
      for (const CellSeries& s : mean_h_series(records)) {
        ScalingFit r = fit_scaling(s.points, model);
        out << format_double(s.d3) << ',' << format_double(s.d1) << ',' << to_string(s.algo)
            << ',' << s.points.size() << ',' << format_double(r.slope) << ','
            << format_double(r.intercept) << ',' << format_double(r.r_squared) << '\n';
      }
      return kExitOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::InvalidParams:
      case ErrorKind::NoCriticalPoint:
      case ErrorKind::DomainError:
        return kExitUsage;
      default:
        return kExitIo;
    }
  }
  return kExitUsage;
}

int run_command(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_command(args, std::cin, std::cout, std::cerr);
}

}  // namespace horn
