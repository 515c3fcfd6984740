#include <algorithm>
#include <functional>
#include <queue>

#include "round_kernel.hpp"

namespace horn {

const char* to_string(Status s) { return s == Status::Sat ? "SAT" : "UNSAT"; }

std::vector<Var> SolveOutcome::true_vars() const {
  std::vector<Var> out;
  for (std::size_t v = 0; v < assignment.size(); ++v)
    if (assignment[v]) out.push_back(static_cast<Var>(v + 1));
  return out;
}

namespace detail {

RoundState::RoundState(const HornFormula& f)
    : remaining(f.num_clauses()), alive(f.num_clauses(), 1), value(f.num_vars(), kUnassigned) {
  for (ClauseId c = 0; c < f.num_clauses(); ++c)
    remaining[c] = static_cast<std::int32_t>(f.clause(c).size());
}

RoundResult run_round_sequential(const HornFormula& f, RoundState& st,
                                 std::span<const Literal> frontier, bool positive_only,
                                 std::vector<Literal>& next) {
  RoundResult r;
  r.stats.committed = frontier.size();
  for (Literal l : frontier) st.value[l.var - 1] = l.positive ? kTrue : kFalse;

  for (Literal l : frontier) {
    auto occ = f.occurrences(l.var, l.positive);
    r.work += occ.size();
    for (const Occurrence& o : occ) {
      r.stats.satisfied += st.alive[o.clause];
      st.alive[o.clause] = 0;
    }
  }

  std::vector<ClauseId> touched;
  for (Literal l : frontier) {
    auto occ = f.occurrences(l.var, !l.positive);
    r.work += occ.size();
    for (const Occurrence& o : occ) {
      if (!st.alive[o.clause]) continue;
      if (--st.remaining[o.clause] <= 1) touched.push_back(o.clause);
    }
  }

  next.clear();
  for (ClauseId c : touched) {
    // A clause can be touched twice in one round; its final count decides.
    if (st.remaining[c] == 0) {
      r.emptied = true;
      return r;
    }
  }
  for (ClauseId c : touched) {
    if (st.remaining[c] != 1) continue;
    Literal u = unit_literal(f, st, c);
    if (!positive_only || u.positive) next.push_back(u);
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  r.stats.new_units = next.size();
  return r;
}

namespace {

enum class Rule { AllUnits, PositiveUnits };

bool has_positive(std::span<const Literal> lits) {
  return std::any_of(lits.begin(), lits.end(), [](Literal l) { return l.positive; });
}

SolveOutcome finish_sat(const HornFormula& f, const RoundState& st, SolveOutcome out) {
  out.status = Status::Sat;
  out.assignment.resize(f.num_vars());
  for (std::size_t v = 0; v < f.num_vars(); ++v) out.assignment[v] = st.value[v] == kTrue;
  return out;
}

SolveOutcome run_rounds(const HornFormula& f, Rule rule, bool optional_step, Execution exec) {
  const bool positive_only = rule == Rule::PositiveUnits;
  RoundState st(f);
  SolveOutcome out;

  std::vector<Literal> frontier;
  for (ClauseId c = 0; c < f.num_clauses(); ++c) {
    auto lits = f.clause(c);
    if (lits.size() == 1 && (!positive_only || lits[0].positive)) frontier.push_back(lits[0]);
  }
  std::sort(frontier.begin(), frontier.end());
  frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());

  std::vector<Literal> next;
  while (!frontier.empty()) {
    if (optional_step && !has_positive(frontier)) {
      // Stop without propagating the negative units: every live clause must
      // still hold an unassigned negative literal for all-FALSE to satisfy it.
      for (ClauseId c = 0; c < f.num_clauses(); ++c) {
        if (!st.alive[c]) continue;
        auto lits = f.clause(c);
        bool ok = std::any_of(lits.begin(), lits.end(), [&](Literal l) {
          return !l.positive && st.value[l.var - 1] != kTrue;
        });
        if (!ok)
          throw Error(ErrorKind::InternalError,
                      "optional step left clause " + std::to_string(c + 1) + " unsatisfied");
      }
      return finish_sat(f, st, std::move(out));
    }

    ++out.rounds;
    // Sorted order puts x directly before ~x.
    for (std::size_t i = 0; i + 1 < frontier.size(); ++i) {
      if (frontier[i].var == frontier[i + 1].var) {
        out.status = Status::Unsat;
        out.per_round.push_back({});
        return out;
      }
    }
    std::erase_if(frontier, [&](Literal l) {
      return st.value[l.var - 1] == (l.positive ? kTrue : kFalse);
    });
    for (Literal l : frontier) {
      if (st.value[l.var - 1] != kUnassigned) {
        out.status = Status::Unsat;
        out.per_round.push_back({});
        return out;
      }
    }

    RoundResult r = exec == Execution::Parallel
                        ? run_round_parallel(f, st, frontier, positive_only, next)
                        : run_round_sequential(f, st, frontier, positive_only, next);
    out.work += r.work;
    out.per_round.push_back(r.stats);
    if (r.emptied) {
      out.status = Status::Unsat;
      return out;
    }
    frontier.swap(next);
  }
  return finish_sat(f, st, std::move(out));
}

}  // namespace
}  // namespace detail

SolveOutcome solve_gp(const HornFormula& formula, bool use_optional_step, Execution exec) {
  return detail::run_rounds(formula, detail::Rule::AllUnits, use_optional_step, exec);
}

SolveOutcome solve_ppur(const HornFormula& formula, Execution exec) {
  return detail::run_rounds(formula, detail::Rule::PositiveUnits, false, exec);
}

SolveOutcome solve_pur_serial(const HornFormula& formula) {
  using namespace detail;
  RoundState st(formula);
  SolveOutcome out;

  std::priority_queue<ClauseId, std::vector<ClauseId>, std::greater<>> units;
  for (ClauseId c = 0; c < formula.num_clauses(); ++c) {
    auto lits = formula.clause(c);
    if (lits.size() == 1 && lits[0].positive) units.push(c);
  }

  while (!units.empty()) {
    ClauseId c = units.top();
    units.pop();
    if (!st.alive[c]) continue;
    Literal u = unit_literal(formula, st, c);

    ++out.rounds;
    RoundStats stats{1, 0, 0};
    st.value[u.var - 1] = kTrue;
    auto sat = formula.occurrences(u.var, true);
    auto fals = formula.occurrences(u.var, false);
    out.work += sat.size() + fals.size();
    for (const Occurrence& o : sat) {
      stats.satisfied += st.alive[o.clause];
      st.alive[o.clause] = 0;
    }
    for (const Occurrence& o : fals) {
      if (!st.alive[o.clause]) continue;
      std::int32_t left = --st.remaining[o.clause];
      if (left == 0) {
        out.status = Status::Unsat;
        out.per_round.push_back(stats);
        return out;
      }
      if (left == 1 && unit_literal(formula, st, o.clause).positive) {
        units.push(o.clause);
        ++stats.new_units;
      }
    }
    out.per_round.push_back(stats);
  }
  return detail::finish_sat(formula, st, std::move(out));
}

}  // namespace horn
