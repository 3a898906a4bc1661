#pragma once

#include <iosfwd>
#include <string>

namespace qes::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNoRoot = 2, kVerificationFailed = 3 };

/// Entry point shared by the qes binary and the tests. Reports go to `out` unless
/// --output is given; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Shortest decimal that round-trips to the same binary64 value.
std::string format_double(double x);

}  // namespace qes::cli
