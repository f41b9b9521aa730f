#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json_text.hpp"

namespace relgas::cli {

/// Malformed input records, unknown operations and bad flags (exit status 2).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs a named operation on an input record and returns its output record.
/// Numerical-domain failures propagate as relgas::DomainError.
Json run_operation(const std::string& name, const Json& input);

bool has_operation(const std::string& name);
std::vector<std::string> operation_names();

/// Parses a state argument: inline JSON, "-" for the given stdin text, or a
/// file path. A fixture document yields its first case's expected record.
Json load_record(const std::string& argument, const std::string& stdinText);

} // namespace relgas::cli
