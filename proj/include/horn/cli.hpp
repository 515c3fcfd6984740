// Command-line front end.  Exit codes:
//   0  success          1  usage error       2  I/O or parse error
//   3  predict hit --max-iters              10 SAT       20 UNSAT

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace horn {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitNonTerm = 3;
inline constexpr int kExitSat = 10;
inline constexpr int kExitUnsat = 20;

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

int run_command(int argc, const char* const* argv);

}  // namespace horn
