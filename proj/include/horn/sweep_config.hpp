// Sweep configuration: a flat key = value file.
//
//   # comment
//   n      = 2^12, 2^13, 10000, 1e5     integers, powers of two or scientific
//   d1     = 0.05, critical, critical-0.01
//   d3     = 1.8, 3.0
//   algo   = ppur                       gp | ppur | pur | predict
//   trials = 20
//   seed   = 1
//   max_iters     = 10000000            predict only
//   optional_step = true                gp only
//   timing        = false               record elapsed_ms
//
// n, d1 and d3 are required; unknown keys are rejected.

#pragma once

#include <iosfwd>
#include <string_view>

#include "horn/experiment.hpp"

namespace horn {

struct SweepConfig {
  Grid grid;
  Algo algo = Algo::PPUR;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  RunOptions options;
};

// Throws Error{SyntaxError}.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig parse_sweep_config(std::string_view text);

}  // namespace horn
