#pragma once

#include "run_config.hpp"

#include <iosfwd>

namespace servrisk::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitComputationError = 3;

/// Executes a resolved config: computes, renders and writes the document to
/// the configured destination. Diagnostics go to `err`; the return value is
/// the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace servrisk::cli
