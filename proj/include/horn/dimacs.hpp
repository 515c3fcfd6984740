// DIMACS CNF reading and writing, restricted to Horn clauses.
//
//   c comment
//   p cnf <vars> <clauses>
//   1 -2 -3 0
//
// Clauses may span lines.  A '%' line ends the clause section.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "horn/formula.hpp"

namespace horn {

// Throws Error{SyntaxError}, Error{HeaderMismatch}, or whatever
// build_formula raises (NonHornClause, VariableOutOfRange, EmptyClause).
HornFormula parse_dimacs(std::istream& in);
HornFormula parse_dimacs(std::string_view text);

// Header, then clauses in stored order with literals in canonical order
// (positive first, negatives ascending).
void emit_dimacs(const HornFormula& formula, std::ostream& out);
std::string emit_dimacs(const HornFormula& formula);

}  // namespace horn
