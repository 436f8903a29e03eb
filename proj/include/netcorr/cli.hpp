#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace netcorr {

/// Exit codes shared by every subcommand, stable for scripting.
inline constexpr int kExitValid = 0;
inline constexpr int kExitError = 1;    // usage or data error
inline constexpr int kExitInvalid = 2;  // a certificate came back invalid

/// Runs the command-line front end: subcommands validate, corr, resistance,
/// embed, scan. Reports go to `out` (or the --output file), diagnostics to
/// `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netcorr
