#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qubit_entropy/sweep.hpp"

namespace qe {

inline constexpr const char* kQuadOrderEnv = "QUBIT_ENTROPY_QUAD_ORDER";

enum ExitCode : int { kExitOk = 0, kExitPipeline = 1, kExitConfig = 2 };

/// Builds a SweepConfig from command-line arguments (program name excluded).
/// Precedence: defaults < --config file < flags < quad-order environment
/// override. Throws Error(Config) naming the offending field.
SweepConfig parse_config(const std::vector<std::string>& args,
                         const std::optional<std::string>& quad_order_env = std::nullopt);

/// Entry point of the qubit-entropy tool; returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace qe
