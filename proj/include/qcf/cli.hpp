#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcf {

/// Runs one CLI invocation (exclusive of the program name). Returns the
/// process exit code: 0 success, 1 forensic anomaly (e.g. an unmatched trace
/// under --strict), 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace qcf
