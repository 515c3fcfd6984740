#include "horn/randgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

namespace horn {

namespace {

std::size_t round_count(double density, std::size_t n) {
  return static_cast<std::size_t>(std::nearbyint(density * static_cast<double>(n)));
}

}  // namespace

void validate(const ModelParams& p) {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidParams, what); };
  if (p.n < 3) fail("n must be at least 3");
  if (!std::isfinite(p.d1) || p.d1 < 0.0 || p.d1 >= 1.0) fail("d1 must lie in [0, 1)");
  if (!std::isfinite(p.d3) || p.d3 < 0.0) fail("d3 must be non-negative");
  if (round_count(p.d1, p.n) > p.n - 1) fail("round(d1*n) exceeds the n-1 candidate variables");
}

std::size_t positive_unit_count(const ModelParams& p) { return round_count(p.d1, p.n); }
std::size_t three_clause_count(const ModelParams& p) { return round_count(p.d3, p.n); }

Clause sample_horn3_clause(Rng& rng, std::size_t n) {
  // Positive variable, then an ordered pair of distinct others; the pair is
  // used unordered, so each of the n*C(n-1,2) clauses has equal mass.
  auto head = static_cast<Var>(rng.below(n) + 1);
  auto pick_other = [&](std::uint64_t slots, Var skip_a, Var skip_b) {
    auto v = static_cast<Var>(rng.below(slots) + 1);
    // Map 1..slots onto 1..n minus the skipped variables, in order.
    Var lo = std::min(skip_a, skip_b), hi = std::max(skip_a, skip_b);
    if (lo != 0 && v >= lo) ++v;
    if (hi != 0 && hi != lo && v >= hi) ++v;
    return v;
  };
  Var a = pick_other(n - 1, head, 0);
  Var b = pick_other(n - 2, head, a);
  if (a > b) std::swap(a, b);
  return {Literal::pos(head), Literal::neg(a), Literal::neg(b)};
}

HornFormula generate(const ModelParams& params) {
  validate(params);
  const std::size_t n = params.n;
  const std::size_t units = positive_unit_count(params);
  const std::size_t triples = three_clause_count(params);
  Rng rng(params.seed);

  std::vector<Clause> clauses;
  clauses.reserve(1 + units + triples);
  clauses.push_back({Literal::neg(1)});

  // Partial Fisher-Yates over x2..xn.
  std::vector<Var> pool(n - 1);
  std::iota(pool.begin(), pool.end(), Var{2});
  for (std::size_t i = 0; i < units; ++i) {
    std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
    clauses.push_back({Literal::pos(pool[i])});
  }

  for (std::size_t i = 0; i < triples; ++i) clauses.push_back(sample_horn3_clause(rng, n));

  return build_formula(n, clauses);
}

}  // namespace horn
