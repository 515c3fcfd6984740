// Horn formula representation.
//
// A formula is stored as a bipartite variable/clause graph: clauses own a
// contiguous slice of the literal array, and every variable owns two slices
// of the occurrence array (positive and negative), each entry pointing back
// at the (clause, position) of the literal.  Every edge is therefore stored
// once from each side.

#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace horn {

using Var = std::uint32_t;        // 1-based variable index
using ClauseId = std::uint32_t;   // 0-based clause index

enum class ErrorKind {
  NonHornClause,
  VariableOutOfRange,
  EmptyClause,
  PartialAssignment,
  InvalidParams,
  DomainError,
  NoCriticalPoint,
  DegenerateFit,
  SyntaxError,
  HeaderMismatch,
  InternalError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct Literal {
  Var var = 0;
  bool positive = false;

  static constexpr Literal pos(Var v) { return {v, true}; }
  static constexpr Literal neg(Var v) { return {v, false}; }
  constexpr Literal operator~() const { return {var, !positive}; }

  // Positive literals order before negative ones of the same variable.
  constexpr auto operator<=>(const Literal& o) const {
    if (auto c = var <=> o.var; c != 0) return c;
    return o.positive <=> positive;
  }
  constexpr bool operator==(const Literal&) const = default;
};

// DIMACS-style signed encoding: +v / -v.
inline std::int64_t to_dimacs(Literal l) {
  return l.positive ? std::int64_t{l.var} : -std::int64_t{l.var};
}

using Clause = std::vector<Literal>;

// Canonical literal order: positive literal first, then negatives by
// ascending variable.  Used for clause equality and DIMACS output.
Clause canonical(Clause c);

struct Occurrence {
  ClauseId clause;
  std::uint32_t position;
  constexpr bool operator==(const Occurrence&) const = default;
};

class HornFormula {
 public:
  HornFormula() = default;

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return clause_begin_.empty() ? 0 : clause_begin_.size() - 1; }
  std::size_t num_literals() const { return literals_.size(); }

  std::span<const Literal> clause(ClauseId c) const {
    return {literals_.data() + clause_begin_[c], clause_begin_[c + 1] - clause_begin_[c]};
  }
  std::span<const Literal> literals() const { return literals_; }

  // Occurrences of variable v (1-based) with the given polarity.
  std::span<const Occurrence> occurrences(Var v, bool positive) const {
    const auto& begin = positive ? pos_begin_ : neg_begin_;
    const auto& occ = positive ? pos_occ_ : neg_occ_;
    return {occ.data() + begin[v - 1], begin[v] - begin[v - 1]};
  }

  std::vector<Clause> clauses() const;

  friend HornFormula build_formula(std::size_t num_vars, std::span<const Clause> clauses);

 private:
  std::size_t num_vars_ = 0;
  std::vector<std::size_t> clause_begin_{0};
  std::vector<Literal> literals_;
  std::vector<std::size_t> pos_begin_{0};
  std::vector<std::size_t> neg_begin_{0};
  std::vector<Occurrence> pos_occ_;
  std::vector<Occurrence> neg_occ_;
};

// Validates and indexes a formula.  Throws Error{NonHornClause},
// Error{VariableOutOfRange} or Error{EmptyClause}.
HornFormula build_formula(std::size_t num_vars, std::span<const Clause> clauses);
inline HornFormula build_formula(std::size_t num_vars, std::initializer_list<Clause> clauses) {
  return build_formula(num_vars, std::span<const Clause>(clauses.begin(), clauses.size()));
}

// Reduced form: duplicate literals and tautologies dropped, duplicate
// clauses (compared as literal sets) collapsed to their first occurrence.
HornFormula normalize(const HornFormula& formula);

struct Reduction {
  HornFormula formula;
  // fresh_origin[i] is the source clause of variable num_vars + 1 + i.
  std::vector<ClauseId> fresh_origin;
};

// Splits every clause longer than three literals into a chain of 3-literal
// Horn clauses linked by fresh variables.  A k-clause becomes k-2 clauses
// over k-3 new variables: (p | ~a | ~y1), (y1 | ~b | ~y2), ..., (yk-3 | ~c | ~d).
Reduction reduce_to_3cnf(const HornFormula& formula);

// True iff every clause has a satisfied literal.  assignment[v-1] is the
// value of variable v; throws Error{PartialAssignment} on size mismatch.
bool check_assignment(const HornFormula& formula, const std::vector<bool>& assignment);

// Clause lists equal up to literal order within each clause.
bool same_clauses(const HornFormula& a, const HornFormula& b);

}  // namespace horn
