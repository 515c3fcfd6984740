// Monte-Carlo harness: measure the round depth h of the solvers on random
// 1-3-Horn formulas, sweep parameter grids, fit scaling laws.

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "horn/meanfield.hpp"
#include "horn/randgen.hpp"
#include "horn/solver.hpp"

namespace horn {

enum class Algo { GP, PPUR, PUR, PREDICT };
enum class RunStatus { Sat, Unsat, NonTerm };

const char* to_string(Algo a);
const char* to_string(RunStatus s);
std::optional<Algo> parse_algo(std::string_view text);   // case-insensitive
std::optional<RunStatus> parse_run_status(std::string_view text);

struct ExperimentRecord {
  std::size_t n = 0;
  double d1 = 0.0;
  double d3 = 0.0;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  Algo algo = Algo::PPUR;
  RunStatus status = RunStatus::Sat;
  std::uint64_t h = 0;
  double elapsed_ms = 0.0;

  bool operator==(const ExperimentRecord&) const = default;
};

struct RunOptions {
  bool timing = false;            // elapsed_ms stays 0 unless set
  bool gp_optional_step = true;
  std::uint64_t max_iters = kDefaultMaxIters;
  bool parallel_trials = true;
};

struct Measurement {
  double mean_h = 0.0;
  double std_h = 0.0;   // sample standard deviation, 0 for a single trial
  double sat_fraction = 0.0;
  std::vector<ExperimentRecord> records;
};

// Runs trials with seeds params.seed + 0 .. params.seed + trials - 1.  h is
// aggregated over every trial regardless of outcome.  PREDICT evaluates the
// mean-field recursion once and reports it as a single record.
Measurement measure_h(const ModelParams& params, Algo algo, std::size_t trials,
                      const RunOptions& options = {});

// A d1 grid value, either absolute or an offset from critical_d1(d3).
struct D1Value {
  double value = 0.0;
  bool relative_to_critical = false;

  double resolve(double d3) const;
};

struct Grid {
  std::vector<std::size_t> n;
  std::vector<D1Value> d1;
  std::vector<double> d3;
};

// Cross product in (d3, d1, n) nesting order, trials innermost.  Records
// are handed to `sink` in that order regardless of how trials execute.
void sweep(const Grid& grid, Algo algo, std::size_t trials, std::uint64_t base_seed,
           const RunOptions& options, const std::function<void(const ExperimentRecord&)>& sink);

std::vector<ExperimentRecord> sweep(const Grid& grid, Algo algo, std::size_t trials,
                                    std::uint64_t base_seed, const RunOptions& options = {});

// CSV: n,d1,d3,seed,trial,algo,status,h,elapsed_ms
inline constexpr const char* kCsvHeader = "n,d1,d3,seed,trial,algo,status,h,elapsed_ms";
std::string format_double(double x);   // 17 significant digits
std::string to_csv_row(const ExperimentRecord& r);
// Throws Error{SyntaxError} on malformed input.
std::vector<ExperimentRecord> read_csv(std::istream& in);

enum class FitModel { HVsLogN, LogHVsLogN };

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  FitModel model = FitModel::HVsLogN;
};

// Least squares of h against ln n (HVsLogN) or ln h against ln n
// (LogHVsLogN).  Needs at least three points with distinct n.
ScalingFit fit_scaling(const std::vector<std::pair<double, double>>& points, FitModel model);

struct CellSeries {
  double d1 = 0.0;
  double d3 = 0.0;
  Algo algo = Algo::PPUR;
  std::vector<std::pair<double, double>> points;   // (n, mean h), ascending n
};

// Groups records by (d3, d1, algo) and averages h per n.
std::vector<CellSeries> mean_h_series(const std::vector<ExperimentRecord>& records);

enum class Regime { Continuous, OffCritical, Critical };
const char* to_string(Regime r);

Regime classify_regime(double d1, double d3, double epsilon);

}  // namespace horn
