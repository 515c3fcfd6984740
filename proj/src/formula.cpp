#include "horn/formula.hpp"

#include <algorithm>
#include <set>

namespace horn {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonHornClause: return "NonHornClause";
    case ErrorKind::VariableOutOfRange: return "VariableOutOfRange";
    case ErrorKind::EmptyClause: return "EmptyClause";
    case ErrorKind::PartialAssignment: return "PartialAssignment";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NoCriticalPoint: return "NoCriticalPoint";
    case ErrorKind::DegenerateFit: return "DegenerateFit";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::HeaderMismatch: return "HeaderMismatch";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

Clause canonical(Clause c) {
  std::sort(c.begin(), c.end(), [](Literal a, Literal b) {
    if (a.positive != b.positive) return a.positive;
    return a.var < b.var;
  });
  return c;
}

std::vector<Clause> HornFormula::clauses() const {
  std::vector<Clause> out;
  out.reserve(num_clauses());
  for (ClauseId c = 0; c < num_clauses(); ++c) {
    auto lits = clause(c);
    out.emplace_back(lits.begin(), lits.end());
  }
  return out;
}

HornFormula build_formula(std::size_t num_vars, std::span<const Clause> clauses) {
  HornFormula f;
  f.num_vars_ = num_vars;

  std::size_t total = 0;
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const Clause& clause = clauses[c];
    if (clause.empty())
      throw Error(ErrorKind::EmptyClause, "clause " + std::to_string(c + 1) + " is empty");
    int positives = 0;
    for (Literal l : clause) {
      if (l.var == 0 || l.var > num_vars)
        throw Error(ErrorKind::VariableOutOfRange,
                    "variable " + std::to_string(l.var) + " outside 1.." + std::to_string(num_vars));
      positives += l.positive;
    }
    if (positives > 1)
      throw Error(ErrorKind::NonHornClause,
                  "clause " + std::to_string(c + 1) + " has " + std::to_string(positives) +
                      " positive literals");
    total += clause.size();
  }

  f.literals_.reserve(total);
  f.clause_begin_.reserve(clauses.size() + 1);
  std::vector<std::size_t> pos_count(num_vars + 1, 0), neg_count(num_vars + 1, 0);
  for (const Clause& clause : clauses) {
    for (Literal l : clause) {
      f.literals_.push_back(l);
      ++(l.positive ? pos_count : neg_count)[l.var];
    }
    f.clause_begin_.push_back(f.literals_.size());
  }

  // Counting sort of literal occurrences into per-variable slices.
  f.pos_begin_.assign(num_vars + 1, 0);
  f.neg_begin_.assign(num_vars + 1, 0);
  for (std::size_t v = 1; v <= num_vars; ++v) {
    f.pos_begin_[v] = f.pos_begin_[v - 1] + pos_count[v];
    f.neg_begin_[v] = f.neg_begin_[v - 1] + neg_count[v];
  }
  f.pos_occ_.resize(f.pos_begin_[num_vars]);
  f.neg_occ_.resize(f.neg_begin_[num_vars]);
  std::vector<std::size_t> pos_fill(f.pos_begin_.begin(), f.pos_begin_.end() - 1);
  std::vector<std::size_t> neg_fill(f.neg_begin_.begin(), f.neg_begin_.end() - 1);
  for (ClauseId c = 0; c < f.num_clauses(); ++c) {
    auto lits = f.clause(c);
    for (std::uint32_t i = 0; i < lits.size(); ++i) {
      Literal l = lits[i];
      if (l.positive)
        f.pos_occ_[pos_fill[l.var - 1]++] = {c, i};
      else
        f.neg_occ_[neg_fill[l.var - 1]++] = {c, i};
    }
  }
  return f;
}

HornFormula normalize(const HornFormula& formula) {
  std::vector<Clause> out;
  std::set<Clause> seen;
  for (ClauseId c = 0; c < formula.num_clauses(); ++c) {
    Clause clause;
    bool tautology = false;
    for (Literal l : formula.clause(c)) {
      if (std::find(clause.begin(), clause.end(), l) != clause.end()) continue;
      if (std::find(clause.begin(), clause.end(), ~l) != clause.end()) tautology = true;
      clause.push_back(l);
    }
    if (tautology) continue;
    if (seen.insert(canonical(clause)).second) out.push_back(std::move(clause));
  }
  return build_formula(formula.num_vars(), out);
}

Reduction reduce_to_3cnf(const HornFormula& formula) {
  Reduction result;
  std::vector<Clause> out;
  Var next_fresh = static_cast<Var>(formula.num_vars());

  for (ClauseId c = 0; c < formula.num_clauses(); ++c) {
    auto lits = formula.clause(c);
    if (lits.size() <= 3) {
      out.emplace_back(lits.begin(), lits.end());
      continue;
    }
    // Positive literal (if any) leads, negatives keep their clause order.
    Clause ordered;
    ordered.reserve(lits.size());
    for (Literal l : lits)
      if (l.positive) ordered.push_back(l);
    for (Literal l : lits)
      if (!l.positive) ordered.push_back(l);

    const std::size_t k = ordered.size();
    Var link = ++next_fresh;
    result.fresh_origin.push_back(c);
    out.push_back({ordered[0], ordered[1], Literal::neg(link)});
    for (std::size_t i = 2; i + 2 < k; ++i) {
      Var next = ++next_fresh;
      result.fresh_origin.push_back(c);
      out.push_back({Literal::pos(link), ordered[i], Literal::neg(next)});
      link = next;
    }
    out.push_back({Literal::pos(link), ordered[k - 2], ordered[k - 1]});
  }
  result.formula = build_formula(next_fresh, out);
  return result;
}

bool check_assignment(const HornFormula& formula, const std::vector<bool>& assignment) {
  if (assignment.size() != formula.num_vars())
    throw Error(ErrorKind::PartialAssignment,
                "assignment covers " + std::to_string(assignment.size()) + " of " +
                    std::to_string(formula.num_vars()) + " variables");
  for (ClauseId c = 0; c < formula.num_clauses(); ++c) {
    auto lits = formula.clause(c);
    bool sat = std::any_of(lits.begin(), lits.end(),
                           [&](Literal l) { return assignment[l.var - 1] == l.positive; });
    if (!sat) return false;
  }
  return true;
}

bool same_clauses(const HornFormula& a, const HornFormula& b) {
  if (a.num_vars() != b.num_vars() || a.num_clauses() != b.num_clauses()) return false;
  for (ClauseId c = 0; c < a.num_clauses(); ++c) {
    auto la = a.clause(c), lb = b.clause(c);
    if (canonical({la.begin(), la.end()}) != canonical({lb.begin(), lb.end()})) return false;
  }
  return true;
}

}  // namespace horn
