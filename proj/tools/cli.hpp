#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace relgas::cli {

enum ExitCode : int {
    Success = 0,
    DomainFailure = 1,
    UsageFailure = 2,
    FixtureMismatch = 3,
};

/// Runs one command line (without the program name). Structured output goes
/// to `out`, diagnostics to `err`; `in` backs the "-" state argument.
int execute(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace relgas::cli
