// Random 1-3-Horn-SAT model H(n, d1, 0, d3):
//   the negative unit ~x1,
//   round(d1*n) positive units on distinct variables drawn from x2..xn,
//   round(d3*n) clauses (x | ~y | ~z) over three distinct variables, drawn
//   uniformly with replacement from all n(n-1)(n-2)/2 such clauses.
// Counts round half to even.  Duplicate clauses are kept; call normalize()
// for reduced form.

#pragma once

#include <cstdint>
#include <random>

#include "horn/formula.hpp"

namespace horn {

struct ModelParams {
  std::size_t n = 3;
  double d1 = 0.0;
  double d3 = 0.0;
  std::uint64_t seed = 0;
};

// Stored in experiment output so runs can be reproduced elsewhere.
inline constexpr const char* kRngAlgorithm = "mt19937_64";

// mt19937_64 with a bounded-integer mapping that is fixed here rather than
// left to the standard library's distributions, which differ by vendor.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t operator()() { return engine_(); }

  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Throws Error{InvalidParams}.
void validate(const ModelParams& params);

std::size_t positive_unit_count(const ModelParams& params);
std::size_t three_clause_count(const ModelParams& params);

// One uniformly random Horn 3-clause over x1..xn, literals (pos, ~lo, ~hi).
Clause sample_horn3_clause(Rng& rng, std::size_t n);

HornFormula generate(const ModelParams& params);

}  // namespace horn
