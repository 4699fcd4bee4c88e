#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grcone::cli {

/// Runs one command-line invocation. `args` excludes the program name;
/// output and diagnostics go to the given streams (input files named "-"
/// are read from standard input). Returns the process exit status:
/// 0 success, 1 parse or validation error, 2 verification failure.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace grcone::cli
