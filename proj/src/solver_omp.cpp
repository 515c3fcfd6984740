// OpenMP round kernel.  Same phases as run_round_sequential, each phase a
// worksharing loop over the frontier separated by barriers:
//   commit -> remove satisfied -> strike falsified (atomic decrements) -> collect units.
// Counter decrements commute, so the final counts do not depend on the
// schedule; the unit list is sorted at the end so the next frontier does not
// either.

#include <algorithm>
#include <atomic>

#include <omp.h>

#include "round_kernel.hpp"

namespace horn::detail {

RoundResult run_round_parallel(const HornFormula& f, RoundState& st,
                               std::span<const Literal> frontier, bool positive_only,
                               std::vector<Literal>& next) {
  RoundResult r;
  r.stats.committed = frontier.size();
  const auto size = static_cast<std::ptrdiff_t>(frontier.size());

  std::size_t work = 0, satisfied = 0;
  std::vector<ClauseId> touched;
  next.clear();
  bool emptied = false;

#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < size; ++i) {
      Literal l = frontier[i];
      st.value[l.var - 1] = l.positive ? kTrue : kFalse;
    }

#pragma omp for schedule(dynamic, 64) reduction(+ : work, satisfied)
    for (std::ptrdiff_t i = 0; i < size; ++i) {
      Literal l = frontier[i];
      auto occ = f.occurrences(l.var, l.positive);
      work += occ.size();
      for (const Occurrence& o : occ) {
        std::atomic_ref<std::uint8_t> alive(st.alive[o.clause]);
        satisfied += alive.exchange(0, std::memory_order_relaxed);
      }
    }

    std::vector<ClauseId> local;
#pragma omp for schedule(dynamic, 64) reduction(+ : work) nowait
    for (std::ptrdiff_t i = 0; i < size; ++i) {
      Literal l = frontier[i];
      auto occ = f.occurrences(l.var, !l.positive);
      work += occ.size();
      for (const Occurrence& o : occ) {
        if (!st.alive[o.clause]) continue;
        std::atomic_ref<std::int32_t> count(st.remaining[o.clause]);
        if (count.fetch_sub(1, std::memory_order_relaxed) - 1 <= 1) local.push_back(o.clause);
      }
    }
#pragma omp critical(horn_touched)
    touched.insert(touched.end(), local.begin(), local.end());
#pragma omp barrier

    const auto n_touched = static_cast<std::ptrdiff_t>(touched.size());
    std::vector<Literal> units;
#pragma omp for schedule(static) reduction(|| : emptied) nowait
    for (std::ptrdiff_t i = 0; i < n_touched; ++i) {
      ClauseId c = touched[i];
      std::int32_t left = st.remaining[c];
      if (left == 0) {
        emptied = true;
      } else if (left == 1) {
        Literal u = unit_literal(f, st, c);
        if (!positive_only || u.positive) units.push_back(u);
      }
    }
#pragma omp critical(horn_units)
    next.insert(next.end(), units.begin(), units.end());
  }

  r.work = work;
  r.stats.satisfied = satisfied;
  r.emptied = emptied;
  if (emptied) {
    next.clear();
    return r;
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  r.stats.new_units = next.size();
  return r;
}

}  // namespace horn::detail
