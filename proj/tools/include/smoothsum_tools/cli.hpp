#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "smoothsum_tools/config.hpp"
#include "smoothsum_tools/table.hpp"

namespace smoothsum::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAcceptance = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCompute = 3;

/// Thrown by parse_args for --help and --version; text is what to print.
struct HelpRequested {
  std::string text;
};

/// Runs one subcommand. args excludes the program name. Results go to
/// cfg.out when set, otherwise to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses args (with any --config file merged in) without running anything.
/// Throws ConfigError.
RunConfig parse_args(const std::vector<std::string>& args);

/// Checks every field against the preconditions of the chosen subcommand.
void validate(const RunConfig& cfg);

/// Tables of a non-verify subcommand.
std::vector<Table> compute(const RunConfig& cfg);

}  // namespace smoothsum::tools
