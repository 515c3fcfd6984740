// Unit-resolution solvers for Horn formulas.
//
//   solve_gp          all unit literals (positive and negative) committed per round
//   solve_ppur        only positive unit literals committed per round
//   solve_pur_serial  one positive unit committed per stage, lowest clause id first
//
// The round solvers report h, the number of executed commit rounds, which is
// the parallel depth of the algorithm.  A round's kernel may run sequentially
// or under OpenMP; both produce identical outcomes.

#pragma once

#include <cstddef>
#include <vector>

#include "horn/formula.hpp"

namespace horn {

enum class Status { Sat, Unsat };

const char* to_string(Status s);

enum class Execution { Sequential, Parallel };

struct RoundStats {
  std::size_t committed = 0;   // frontier literals committed this round
  std::size_t satisfied = 0;   // clauses removed as satisfied
  std::size_t new_units = 0;   // distinct unit literals produced for the next round
};

struct SolveOutcome {
  Status status = Status::Sat;
  std::vector<bool> assignment;   // assignment[v-1]; populated iff Sat
  std::size_t rounds = 0;         // commit rounds (stages for PUR)
  std::size_t work = 0;           // literal occurrences visited by commits
  std::vector<RoundStats> per_round;

  std::vector<Var> true_vars() const;
};

SolveOutcome solve_gp(const HornFormula& formula, bool use_optional_step,
                      Execution exec = Execution::Sequential);

SolveOutcome solve_ppur(const HornFormula& formula, Execution exec = Execution::Sequential);

SolveOutcome solve_pur_serial(const HornFormula& formula);

}  // namespace horn
