#pragma once

#include "servrisk/serviceability.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace servrisk {

/// Smallest sample count accepted per validated case.
inline constexpr std::uint64_t kMinOracleSamples = 10000;

/// |z| above which an evaluated cell counts as an exceedance.
inline constexpr double kExceedanceZ = 3.0;

/// Monte Carlo cross-check of one analytic risk weight.
///
/// Numerator and denominator events are counted on the same draws (common
/// random numbers), so they are nested threshold crossings and the ratio
/// estimator sheds most of its variance.
struct OracleReport {
    ServiceabilityCase subject;
    std::uint64_t samples = 0;
    double empirical_pd = 0.0;      ///< fraction of draws below the case trigger
    double empirical_base_pd = 0.0; ///< fraction of draws below the base trigger
    double empirical_weight = 0.0;  ///< ratio of the two, from exact counts
    double standard_error = 0.0;    ///< delta-method SE of the ratio
    double analytic_weight = 0.0;
    double z_score = 0.0; ///< (empirical - analytic) / standard_error
};

/// Estimates the risk weight for `c` by simulation and compares it with the
/// analytic value. Deterministic per (case, samples, seed).
///
/// Throws std::invalid_argument when samples < kMinOracleSamples and
/// OracleUnderpoweredError when no draw falls below the base trigger.
OracleReport validate_case(const ServiceabilityCase& c, std::uint64_t samples,
                           std::uint64_t seed);

enum class GridCellStatus {
    Evaluated,
    SaturatedCell, ///< trigger probability is exactly 1; nothing to estimate
    UnderflowCell, ///< trigger probability is exactly 0; weight is exactly 0
    Failed,        ///< the cell raised an error; see message
};

struct GridCellValidation {
    double nsr = 0.0;
    double sd = 0.0;
    GridCellStatus status = GridCellStatus::Evaluated;
    std::optional<OracleReport> report; ///< engaged iff status == Evaluated
    std::string message;                ///< skip reason or failure detail
};

struct GridValidationSummary {
    std::vector<GridCellValidation> cells; ///< row-major over (nsr, sd)
    std::size_t evaluated = 0;
    std::size_t saturated_skipped = 0;
    std::size_t underflow_skipped = 0;
    std::size_t failed = 0;
    std::size_t exceedances = 0; ///< evaluated cells with |z| > kExceedanceZ
};

/// Runs validate_case over every cell of the requested grid. Empty axes
/// yield an empty summary.
///
/// Each cell draws its own deterministic seed from (seed, cell index), so
/// results do not depend on scheduling. Cells whose trigger probability is
/// exactly 0 or 1 are recorded as skipped rather than simulated; cells that
/// raise are recorded as Failed with the error text and the remaining cells
/// still run. worker_count == 0 uses the hardware concurrency.
GridValidationSummary validate_grid(const GridRequest& request, std::uint64_t samples,
                                    std::uint64_t seed, unsigned worker_count = 0);

} // namespace servrisk
