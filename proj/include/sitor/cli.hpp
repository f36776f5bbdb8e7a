#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sitor::cli {

// Runs one CLI invocation (args exclude the program name) writing the report
// to `out` (or the --out file) and diagnostics to `err`. Exit codes: 0 on
// success, 1 on contract/validation errors, 2 on malformed input files.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sitor::cli
