#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gturan::cli {

/// Runs one command line (without the program name). JSON or CSV goes to
/// `out`, diagnostics to `err`. Exit codes: 0 ok, 1 usage or malformed
/// input, 2 operational limit exceeded, 3 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Splits a manifest line into arguments; double quotes group words.
std::vector<std::string> split_command_line(const std::string& line);

}  // namespace gturan::cli
