#pragma once

#include <optional>
#include <string>

#include "lozenge/config.hpp"
#include "lozenge/errors.hpp"
#include "lozenge/group.hpp"

namespace lozenge {

// Process exit codes of the command surface.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,      // unexpected failure outside the error model
  kExitInconclusive = 2,  // a search or certificate could not decide within tolerance
  kExitViolation = 3,     // a checked invariant failed
  kExitInput = 4,         // unusable input
};

int exit_code_for(ErrorCode code);

struct CommandRequest {
  std::string command;  // info, classify, chain, annulus, cocyl, render
  std::string word;     // required by every command except info
  int n = 0;            // chain length; 0 takes the configured default
  bool render = false;  // also produce SVG and CSV
  bool timings = false; // append wall-clock timing (breaks byte determinism)
};

struct CommandResult {
  int exit_code = kExitOk;
  std::string report;
  std::optional<std::string> svg;
  std::optional<std::string> csv;
};

const char* const* command_names();  // null-terminated

// Runs one command. Never throws for errors of the error model: they are
// serialized into the report and mapped to an exit code.
CommandResult run_command(const CommandRequest& request, const Config& config,
                          const ElementCache::Provider& provider = {});

}  // namespace lozenge
