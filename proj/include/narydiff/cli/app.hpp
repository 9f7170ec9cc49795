#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace narydiff::cli {

/// Full command-line entry point. `args` excludes the program name. Writes
/// the report to `out` and diagnostics to `err`; returns the exit code
/// (0 success, 1 identity violated, 2 usage or parse error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Comma-separated rational strings; empty fields are rejected.
std::vector<std::string> split_points(const std::string& list);

/// One rational per line; blank lines and lines starting with '#' skipped.
std::vector<std::string> read_points_file(const std::string& path);

}  // namespace narydiff::cli
