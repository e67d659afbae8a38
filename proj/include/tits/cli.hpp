#pragma once

// Command-line front end. Exit codes: 0 success, 1 malformed input or domain
// error, 2 verification counterexample, 3 resource limit, 4 internal error.

#include <iosfwd>

namespace tits::cli {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tits::cli
