// Serial reference kernel vs OpenMP round kernel on random 1-3-Horn formulas.

#include <benchmark/benchmark.h>

#include "horn/randgen.hpp"
#include "horn/solver.hpp"

namespace {

void BM_Ppur(benchmark::State& state, horn::Execution exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  horn::HornFormula f = horn::generate({n, 0.1, 1.8, 1});
  std::size_t rounds = 0;
  for (auto _ : state) {
    horn::SolveOutcome r = horn::solve_ppur(f, exec);
    rounds = r.rounds;
    benchmark::DoNotOptimize(r.work);
  }
  state.counters["h"] = static_cast<double>(rounds);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.num_literals()));
}

void BM_Gp(benchmark::State& state, horn::Execution exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  horn::HornFormula f = horn::generate({n, 0.1, 3.0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(horn::solve_gp(f, false, exec).work);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.num_literals()));
}

void BM_PurSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  horn::HornFormula f = horn::generate({n, 0.1, 1.8, 1});
  for (auto _ : state) benchmark::DoNotOptimize(horn::solve_pur_serial(f).work);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.num_literals()));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Ppur, sequential, horn::Execution::Sequential)->RangeMultiplier(8)->Range(1 << 12, 1 << 21);
BENCHMARK_CAPTURE(BM_Ppur, openmp, horn::Execution::Parallel)->RangeMultiplier(8)->Range(1 << 12, 1 << 21);
BENCHMARK_CAPTURE(BM_Gp, sequential, horn::Execution::Sequential)->RangeMultiplier(8)->Range(1 << 12, 1 << 21);
BENCHMARK_CAPTURE(BM_Gp, openmp, horn::Execution::Parallel)->RangeMultiplier(8)->Range(1 << 12, 1 << 21);
BENCHMARK(BM_PurSerial)->RangeMultiplier(8)->Range(1 << 12, 1 << 21);

BENCHMARK_MAIN();
