#pragma once

#include "run_config.hpp"

#include <servrisk/mc_oracle.hpp>
#include <servrisk/risk_model.hpp>
#include <servrisk/serviceability.hpp>

#include <string>

namespace servrisk::cli {

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

/// Fixed two-decimal form used by the markdown risk-weight table.
std::string format_fixed2(double value);

/// Risk-weight table. CSV and JSON carry full precision; markdown rounds
/// to two decimals and labels dispersion columns as percentages.
std::string render_grid(const RiskWeightGrid& grid, OutputFormat format);

/// Adjusted PD/LGD/EL plus the named weight ledgers, full precision.
std::string render_score(const LoanProfile& profile, OutputFormat format);

/// Per-cell oracle reports plus run parameters and the exceedance summary.
std::string render_validation(const GridValidationSummary& summary, const RunConfig& config,
                              OutputFormat format);

/// One-line digest of a validation run, for diagnostics.
std::string summarize_validation(const GridValidationSummary& summary);

} // namespace servrisk::cli
