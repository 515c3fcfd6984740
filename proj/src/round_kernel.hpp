// Internal: per-round state and the two round kernels (sequential reference
// in solver_serial.cpp, OpenMP in solver_omp.cpp).

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "horn/formula.hpp"
#include "horn/solver.hpp"

namespace horn::detail {

enum : std::int8_t { kFalse = -1, kUnassigned = 0, kTrue = 1 };

struct RoundState {
  explicit RoundState(const HornFormula& f);

  std::vector<std::int32_t> remaining;   // unfalsified literals per clause
  std::vector<std::uint8_t> alive;       // cleared once a literal is satisfied
  std::vector<std::int8_t> value;        // value[v-1]
};

struct RoundResult {
  bool emptied = false;
  std::size_t work = 0;
  RoundStats stats;
};

// Commits `frontier` (sorted, conflict-free, all unassigned), removes
// satisfied clauses, strikes falsified literals and fills `next` with the
// sorted distinct unit literals left behind.  With positive_only, negative
// units are not emitted.
RoundResult run_round_sequential(const HornFormula& f, RoundState& st,
                                 std::span<const Literal> frontier, bool positive_only,
                                 std::vector<Literal>& next);

RoundResult run_round_parallel(const HornFormula& f, RoundState& st,
                               std::span<const Literal> frontier, bool positive_only,
                               std::vector<Literal>& next);

// The single unassigned literal of a clause whose remaining count is 1.
inline Literal unit_literal(const HornFormula& f, const RoundState& st, ClauseId c) {
  for (Literal l : f.clause(c))
    if (st.value[l.var - 1] == kUnassigned) return l;
  throw Error(ErrorKind::InternalError, "unit clause without an unassigned literal");
}

}  // namespace horn::detail
