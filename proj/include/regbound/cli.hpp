#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "regbound/error.hpp"
#include "regbound/projection.hpp"

namespace regbound::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kInvalidInput = 2,
  kInconsistent = 3,
  kIncompatible = 4,
};

int exit_code_for(Errc code) noexcept;

/// Resolve `source` as, in order: a catalog name, inline JSON (leading '{'),
/// or a path to a JSON spec file. Accepted documents:
///   {"family": "curve",   "d": 4, "g": 1, "r": 3}
///   {"family": "surface", "d": 4, "pi": 0, "chi": 1, "r": 5}
///   {"family": "scroll",  "n": 2, "d": 4, "g": 0, "r": 5}
///   {"dim": 2, "ambient": 5, "coeffs": [1, 1, 4]}
///   {"dim": 1, "ambient": 3, "values": [[0, 0], [1, 4]]}
/// An optional "name" field labels the spec. Throws Error(parse_error) or
/// Error(validation_error, ...) with the offending field path.
VarietySpec load_spec(std::string_view source);

struct CommandResult {
  int exit_code = kSuccess;
  std::string out;  // report document
  std::string err;  // diagnostics
};

/// Parse `args` (without the program name) and run one of the subcommands
/// bound, table, ranks, splittings, verify, catalog. Never throws.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace regbound::cli
