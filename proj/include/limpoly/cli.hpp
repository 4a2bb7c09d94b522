#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace limpoly {

/// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_counterexample = 2;

/// Runs the command line (argv[0] is the program name). Reports go to out,
/// diagnostics to err. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace limpoly
