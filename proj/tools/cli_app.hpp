#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hofa::cli {

/// Parses argv-style arguments (without the program name), dispatches to the
/// library, and writes one canonical JSON report line to `out`. Returns 0 on
/// success, 2 on validation errors (diagnostics on `err`), 1 on internal
/// failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hofa::cli
