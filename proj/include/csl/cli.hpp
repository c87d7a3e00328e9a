#pragma once

// Command-line front end. Exit codes:
//   0 success, 1 usage or parse error, 2 domain error,
//   3 verify mismatch (or any failed internal consistency check).

#include <ostream>
#include <string>
#include <vector>

namespace csl::cli {

enum ExitCode : int { ok = 0, usage = 1, domain = 2, mismatch = 3 };

/// Runs one request. args excludes the program name. The report goes to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed 6-decimal rendering used for every angle the tool prints.
std::string format_degrees(double degrees);

}  // namespace csl::cli
