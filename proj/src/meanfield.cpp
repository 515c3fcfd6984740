#include "horn/meanfield.hpp"

#include <cmath>
#include <string>

#include "horn/formula.hpp"

namespace horn {

MeanFieldState flow_at(double t, const MeanFieldState& s) {
  if (!(t >= 0.0 && t < 1.0))
    throw Error(ErrorKind::DomainError, "flow time must lie in [0, 1), got " + std::to_string(t));
  const double rest = 1.0 - t;
  MeanFieldState out;
  out.n = s.n * rest;
  out.d1 = 1.0 - (1.0 - s.d1) / rest * std::exp(-(s.d2 * t + s.d3 * t * t));
  out.d2 = rest * (s.d2 + 2.0 * s.d1 * s.d3);
  out.d3 = rest * rest * s.d3;
  return out;
}

MeanFieldState recursion_step(const MeanFieldState& s) {
  const double rest = 1.0 - s.d1;
  MeanFieldState out;
  out.n = s.n * rest;
  out.d1 = 1.0 - std::exp(-s.d1 * (s.d2 + s.d1 * s.d3));
  out.d2 = rest * (s.d2 + 2.0 * s.d1 * s.d3);
  out.d3 = s.d3 * rest * rest;
  return out;
}

Prediction predict_h(double n, double d1, double d3, std::uint64_t max_iters) {
  if (!(n >= 1.0) || !std::isfinite(n))
    throw Error(ErrorKind::InvalidParams, "n must be at least 1");
  if (!(d1 >= 0.0 && d1 <= 1.0)) throw Error(ErrorKind::InvalidParams, "d1 must lie in [0, 1]");
  if (!(d3 >= 0.0) || !std::isfinite(d3))
    throw Error(ErrorKind::InvalidParams, "d3 must be non-negative");

  MeanFieldState s{n, d1, 0.0, d3};
  Prediction p;
  while (s.d1 * s.n >= 1.0) {
    if (p.h >= max_iters) {
      p.terminated = false;
      return p;
    }
    s = recursion_step(s);
    ++p.h;
  }
  return p;
}

double critical_d1(double d3) {
  if (!(d3 >= 2.0))
    throw Error(ErrorKind::NoCriticalPoint,
                "no discontinuity below d3 = 2 (got " + std::to_string(d3) + ")");
  const double t0 = 0.5 * (1.0 - std::sqrt(1.0 - 2.0 / d3));
  return 1.0 - std::exp(d3 * t0 * t0) / (2.0 * d3 * t0);
}

}  // namespace horn
