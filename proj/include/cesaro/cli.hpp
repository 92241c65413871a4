#pragma once

// Command-line front end. Exit codes: 0 success, 1 disagreement between
// verdict engines, 2 usage, parse or config error.

#include <iosfwd>

namespace cesaro {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitUsage = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cesaro
