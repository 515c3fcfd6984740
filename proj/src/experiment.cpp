#include "horn/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <sstream>
#include <tuple>

namespace horn {

const char* to_string(Algo a) {
  switch (a) {
    case Algo::GP: return "GP";
    case Algo::PPUR: return "PPUR";
    case Algo::PUR: return "PUR";
    case Algo::PREDICT: return "PREDICT";
  }
  return "?";
}

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Sat: return "SAT";
    case RunStatus::Unsat: return "UNSAT";
    case RunStatus::NonTerm: return "NONTERM";
  }
  return "?";
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Continuous: return "CONTINUOUS";
    case Regime::OffCritical: return "OFF_CRITICAL";
    case Regime::Critical: return "CRITICAL";
  }
  return "?";
}

namespace {

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

double elapsed_ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

ExperimentRecord run_trial(const ModelParams& params, Algo algo, std::size_t trial,
                           const RunOptions& options) {
  ExperimentRecord rec{params.n, params.d1, params.d3, params.seed, trial, algo};
  const auto start = std::chrono::steady_clock::now();
  if (algo == Algo::PREDICT) {
    Prediction p = predict_h(static_cast<double>(params.n), params.d1, params.d3, options.max_iters);
    rec.h = p.h;
    rec.status = p.terminated ? RunStatus::Sat : RunStatus::NonTerm;
  } else {
    HornFormula f = generate(params);
    SolveOutcome out = algo == Algo::GP     ? solve_gp(f, options.gp_optional_step)
                       : algo == Algo::PPUR ? solve_ppur(f)
                                            : solve_pur_serial(f);
    rec.h = out.rounds;
    rec.status = out.status == Status::Sat ? RunStatus::Sat : RunStatus::Unsat;
  }
  if (options.timing) rec.elapsed_ms = elapsed_ms_since(start);
  return rec;
}

std::vector<ExperimentRecord> run_trials(const ModelParams& params, Algo algo, std::size_t trials,
                                         const RunOptions& options) {
  if (trials == 0) throw Error(ErrorKind::InvalidParams, "trials must be at least 1");
  validate(params);
  if (algo == Algo::PREDICT) return {run_trial(params, algo, 0, options)};

  std::vector<ExperimentRecord> records(trials);
  const auto count = static_cast<std::ptrdiff_t>(trials);
  // Exceptions must not escape the parallel region; params were validated.
#pragma omp parallel for schedule(dynamic, 1) if (options.parallel_trials)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    ModelParams p = params;
    p.seed = params.seed + static_cast<std::uint64_t>(t);
    records[t] = run_trial(p, algo, static_cast<std::size_t>(t), options);
  }
  return records;
}

}  // namespace

std::optional<Algo> parse_algo(std::string_view text) {
  const std::string u = upper(text);
  for (Algo a : {Algo::GP, Algo::PPUR, Algo::PUR, Algo::PREDICT})
    if (u == to_string(a)) return a;
  return std::nullopt;
}

std::optional<RunStatus> parse_run_status(std::string_view text) {
  const std::string u = upper(text);
  for (RunStatus s : {RunStatus::Sat, RunStatus::Unsat, RunStatus::NonTerm})
    if (u == to_string(s)) return s;
  return std::nullopt;
}

Measurement measure_h(const ModelParams& params, Algo algo, std::size_t trials,
                      const RunOptions& options) {
  Measurement m;
  m.records = run_trials(params, algo, trials, options);
  const auto k = static_cast<double>(m.records.size());
  double sum = 0.0, sat = 0.0;
  for (const auto& r : m.records) {
    sum += static_cast<double>(r.h);
    sat += r.status == RunStatus::Sat;
  }
  m.mean_h = sum / k;
  m.sat_fraction = sat / k;
  if (m.records.size() > 1) {
    double ss = 0.0;
    for (const auto& r : m.records) ss += std::pow(static_cast<double>(r.h) - m.mean_h, 2);
    m.std_h = std::sqrt(ss / (k - 1.0));
  }
  return m;
}

double D1Value::resolve(double d3) const {
  return relative_to_critical ? critical_d1(d3) + value : value;
}

void sweep(const Grid& grid, Algo algo, std::size_t trials, std::uint64_t base_seed,
           const RunOptions& options, const std::function<void(const ExperimentRecord&)>& sink) {
  if (grid.n.empty() || grid.d1.empty() || grid.d3.empty())
    throw Error(ErrorKind::InvalidParams, "sweep grid needs at least one n, d1 and d3 value");
  if (trials == 0) throw Error(ErrorKind::InvalidParams, "trials must be at least 1");
  for (double d3 : grid.d3)
    for (const D1Value& d1 : grid.d1)
      for (std::size_t n : grid.n) {
        ModelParams p{n, d1.resolve(d3), d3, base_seed};
        for (const auto& rec : run_trials(p, algo, trials, options)) sink(rec);
      }
}

std::vector<ExperimentRecord> sweep(const Grid& grid, Algo algo, std::size_t trials,
                                    std::uint64_t base_seed, const RunOptions& options) {
  std::vector<ExperimentRecord> out;
  sweep(grid, algo, trials, base_seed, options,
        [&](const ExperimentRecord& r) { out.push_back(r); });
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_csv_row(const ExperimentRecord& r) {
  std::ostringstream os;
  os << r.n << ',' << format_double(r.d1) << ',' << format_double(r.d3) << ',' << r.seed << ','
     << r.trial << ',' << to_string(r.algo) << ',' << to_string(r.status) << ',' << r.h << ','
     << format_double(r.elapsed_ms);
  return os.str();
}

namespace {

template <typename T>
T parse_field(std::string_view text, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorKind::SyntaxError,
                "line " + std::to_string(line) + ": bad field '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::vector<ExperimentRecord> read_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) throw Error(ErrorKind::SyntaxError, "empty CSV input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader)
    throw Error(ErrorKind::SyntaxError, "unexpected CSV header: " + line);

  std::vector<ExperimentRecord> out;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = line;
    for (;;) {
      auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 9)
      throw Error(ErrorKind::SyntaxError, "line " + std::to_string(lineno) + ": expected 9 fields");
    ExperimentRecord r;
    r.n = parse_field<std::size_t>(fields[0], lineno);
    r.d1 = parse_field<double>(fields[1], lineno);
    r.d3 = parse_field<double>(fields[2], lineno);
    r.seed = parse_field<std::uint64_t>(fields[3], lineno);
    r.trial = parse_field<std::size_t>(fields[4], lineno);
    auto algo = parse_algo(fields[5]);
    auto status = parse_run_status(fields[6]);
    if (!algo || !status)
      throw Error(ErrorKind::SyntaxError, "line " + std::to_string(lineno) + ": bad algo/status");
    r.algo = *algo;
    r.status = *status;
    r.h = parse_field<std::uint64_t>(fields[7], lineno);
    r.elapsed_ms = parse_field<double>(fields[8], lineno);
    out.push_back(r);
  }
  return out;
}

ScalingFit fit_scaling(const std::vector<std::pair<double, double>>& points, FitModel model) {
  if (points.size() < 3)
    throw Error(ErrorKind::DegenerateFit, "scaling fit needs at least 3 points");
  std::vector<double> xs, ys;
  for (auto [n, h] : points) {
    if (!(n > 0.0)) throw Error(ErrorKind::DomainError, "n must be positive");
    xs.push_back(std::log(n));
    if (model == FitModel::LogHVsLogN) {
      if (!(h > 0.0)) throw Error(ErrorKind::DomainError, "log-log fit needs positive h");
      ys.push_back(std::log(h));
    } else {
      ys.push_back(h);
    }
  }
  const auto k = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw Error(ErrorKind::DegenerateFit, "all abscissae are equal");

  ScalingFit fit;
  fit.model = model;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += e * e;
  }
  fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return fit;
}

std::vector<CellSeries> mean_h_series(const std::vector<ExperimentRecord>& records) {
  using Key = std::tuple<double, double, int>;
  std::vector<Key> order;
  std::map<Key, std::map<std::size_t, std::pair<double, std::size_t>>> cells;
  for (const auto& r : records) {
    Key key{r.d3, r.d1, static_cast<int>(r.algo)};
    auto [it, inserted] = cells.try_emplace(key);
    if (inserted) order.push_back(key);
    auto& acc = it->second[r.n];
    acc.first += static_cast<double>(r.h);
    ++acc.second;
  }
  std::vector<CellSeries> out;
  for (const Key& key : order) {
    CellSeries s{std::get<1>(key), std::get<0>(key), static_cast<Algo>(std::get<2>(key)), {}};
    for (auto& [n, acc] : cells[key])
      s.points.emplace_back(static_cast<double>(n), acc.first / static_cast<double>(acc.second));
    out.push_back(std::move(s));
  }
  return out;
}

Regime classify_regime(double d1, double d3, double epsilon) {
  if (!(epsilon > 0.0)) throw Error(ErrorKind::InvalidParams, "epsilon must be positive");
  if (d3 < 2.0) return Regime::Continuous;
  return std::abs(d1 - critical_d1(d3)) < epsilon ? Regime::Critical : Regime::OffCritical;
}

}  // namespace horn
