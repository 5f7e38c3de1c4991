#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swarm_apf {

// Process exit codes of the command-line tool.
inline constexpr int kExitComplete = 0;
inline constexpr int kExitUsage = 1;  // bad flags, unreadable files
inline constexpr int kExitStepLimit = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitParse = 4;
inline constexpr int kExitNumerical = 5;

/// Entry point of the `swarm_apf` tool (subcommands run, compare, gen).
/// `args` excludes the program name. Data goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace swarm_apf
