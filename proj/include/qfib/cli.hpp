// Command-line front end: eval | coeff | verify | tables.
//
// Exit codes: 0 all pass, 1 verification failure (or golden mismatch),
// 2 usage error, 3 request over the desk-scale budget.
#pragma once

#include <iosfwd>

namespace qfib {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qfib
