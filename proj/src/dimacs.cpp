#include "horn/dimacs.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace horn {

namespace {

[[noreturn]] void syntax_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_int(std::string_view tok, T& value) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

HornFormula parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t num_vars = 0, num_clauses = 0;
  std::vector<Clause> clauses;
  Clause current;

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0].front() == 'c') continue;
    if (toks[0] == "%") break;
    if (toks[0] == "p") {
      if (have_header) syntax_error(lineno, "duplicate header");
      if (toks.size() != 4 || toks[1] != "cnf" || !parse_int(toks[2], num_vars) ||
          !parse_int(toks[3], num_clauses))
        syntax_error(lineno, "expected 'p cnf <vars> <clauses>'");
      have_header = true;
      continue;
    }
    if (!have_header) syntax_error(lineno, "clause before 'p cnf' header");
    for (auto tok : toks) {
      long long lit = 0;
      if (!parse_int(tok, lit)) syntax_error(lineno, "bad literal '" + std::string(tok) + "'");
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const unsigned long long var = lit < 0 ? -static_cast<unsigned long long>(lit)
                                             : static_cast<unsigned long long>(lit);
      if (var > num_vars)
        throw Error(ErrorKind::VariableOutOfRange,
                    "line " + std::to_string(lineno) + ": variable " + std::to_string(var) +
                        " exceeds header count " + std::to_string(num_vars));
      current.push_back({static_cast<Var>(var), lit > 0});
    }
  }
  if (!have_header) syntax_error(lineno, "missing 'p cnf' header");
  if (!current.empty()) syntax_error(lineno, "last clause is not terminated by 0");
  if (clauses.size() != num_clauses)
    throw Error(ErrorKind::HeaderMismatch, "header declares " + std::to_string(num_clauses) +
                                               " clauses, found " + std::to_string(clauses.size()));
  return build_formula(num_vars, clauses);
}

HornFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

void emit_dimacs(const HornFormula& formula, std::ostream& out) {
  out << "p cnf " << formula.num_vars() << ' ' << formula.num_clauses() << '\n';
  for (ClauseId c = 0; c < formula.num_clauses(); ++c) {
    auto lits = formula.clause(c);
    for (Literal l : canonical({lits.begin(), lits.end()})) out << to_dimacs(l) << ' ';
    out << "0\n";
  }
}

std::string emit_dimacs(const HornFormula& formula) {
  std::ostringstream os;
  emit_dimacs(formula, os);
  return os.str();
}

}  // namespace horn
