// Mean-field description of positive unit resolution on random Horn formulas.
//
// Densities are scaled by the number of still-unassigned variables:
//   d1  positive unit clauses, d2  2-clauses, d3  3-clauses.
// flow_at() evaluates the serial (one unit per stage) trajectory at scaled
// time t = stages/n.  recursion_step() advances one parallel round, which is
// the serial flow run up to t = d1.  predict_h() iterates rounds until fewer
// than one positive unit is expected.

#pragma once

#include <cstddef>
#include <cstdint>

namespace horn {

struct MeanFieldState {
  double n = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
};

// Throws Error{DomainError} unless 0 <= t < 1.
MeanFieldState flow_at(double t, const MeanFieldState& initial);

MeanFieldState recursion_step(const MeanFieldState& state);

struct Prediction {
  std::uint64_t h = 0;
  bool terminated = true;
};

inline constexpr std::uint64_t kDefaultMaxIters = 10'000'000;

// Starts from (n, d1, 0, d3).  Throws Error{InvalidParams} for n < 1,
// d1 outside [0, 1] or d3 < 0.
Prediction predict_h(double n, double d1, double d3, std::uint64_t max_iters = kDefaultMaxIters);

// Critical initial unit density for d3 >= 2:
//   t0 = (1 - sqrt(1 - 2/d3)) / 2,  d1* = 1 - exp(d3 t0^2) / (2 d3 t0).
// Throws Error{NoCriticalPoint} for d3 < 2.
double critical_d1(double d3);

}  // namespace horn
