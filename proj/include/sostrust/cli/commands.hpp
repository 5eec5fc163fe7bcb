#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sostrust/cli/config.hpp"

namespace sostrust::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitWitness = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::vector<std::string> outputs;  // files written, relative to the run directory
  std::string message;
};

/// Runs one command with its effective config into an existing directory and
/// writes metadata.json next to its outputs. Relative input paths in the
/// config resolve against `config_dir`. Throws on invalid configs or inputs.
CommandResult run_command(CommandKind kind, const nlohmann::json& config,
                          const std::filesystem::path& config_dir,
                          const std::filesystem::path& out_dir);

/// Whole command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sostrust::cli
