#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prepos {

enum class ExitCode : int { Ok = 0, Validation = 1, Solve = 2, Io = 3 };

/// Runs one subcommand (generate, solve, sweep, validate). `args` excludes the
/// program name.
ExitCode run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prepos
