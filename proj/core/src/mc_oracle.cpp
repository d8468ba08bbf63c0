#include "servrisk/mc_oracle.hpp"

#include "servrisk/distribution.hpp"
#include "servrisk/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace servrisk {

namespace {

/// splitmix64 step; used to derive independent per-cell seeds.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(mix64(seed) ^ mix64(index + 1));
}

void require_sample_budget(std::uint64_t samples) {
    if (samples < kMinOracleSamples) {
        throw std::invalid_argument("samples must be at least " +
                                    std::to_string(kMinOracleSamples));
    }
}

double ratio_standard_error(std::uint64_t samples, std::uint64_t trigger_count,
                            std::uint64_t base_count) {
    const double n = static_cast<double>(samples);
    // Half a hit stands in for an empty numerator: the plain delta-method
    // variance collapses to zero there, saturating the z-score even though
    // zero hits is the likeliest outcome for a deep-tail cell.
    const double hits = trigger_count == 0 ? 0.5 : static_cast<double>(trigger_count);
    const double p1 = hits / n;
    const double p2 = static_cast<double>(base_count) / n;
    // Nested threshold events on shared draws: the joint probability is the
    // smaller marginal.
    const double p12 = std::min(p1, p2);
    const double ratio = hits / static_cast<double>(base_count);
    const double variance = (p1 * (1.0 - p1) + ratio * ratio * p2 * (1.0 - p2) -
                             2.0 * ratio * (p12 - p1 * p2)) /
                            (n * p2 * p2);
    return std::sqrt(std::max(variance, 0.0));
}

double z_for(double empirical, double analytic, double standard_error) {
    const double diff = empirical - analytic;
    if (standard_error > 0.0) return diff / standard_error;
    if (diff == 0.0) return 0.0;
    return std::copysign(std::numeric_limits<double>::infinity(), diff);
}

} // namespace

OracleReport validate_case(const ServiceabilityCase& c, std::uint64_t samples,
                           std::uint64_t seed) {
    require_sample_budget(samples);
    const double analytic = risk_weight(c);

    const double trigger = c.stress_factor() / c.nsr();
    const double base_trigger = c.stress_factor() / c.base_nsr();
    Sampler sampler{c.distribution(), seed};
    std::uint64_t trigger_count = 0;
    std::uint64_t base_count = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const double x = sampler.next();
        if (x < trigger) ++trigger_count;
        if (x < base_trigger) ++base_count;
    }
    if (base_count == 0) {
        throw OracleUnderpoweredError(
            "no draw fell below the base trigger; increase samples or the base tail");
    }

    OracleReport report{c, samples};
    report.empirical_pd = static_cast<double>(trigger_count) / static_cast<double>(samples);
    report.empirical_base_pd = static_cast<double>(base_count) / static_cast<double>(samples);
    report.empirical_weight =
        static_cast<double>(trigger_count) / static_cast<double>(base_count);
    report.standard_error = ratio_standard_error(samples, trigger_count, base_count);
    report.analytic_weight = analytic;
    report.z_score = z_for(report.empirical_weight, analytic, report.standard_error);
    return report;
}

GridValidationSummary validate_grid(const GridRequest& request, std::uint64_t samples,
                                    std::uint64_t seed, unsigned worker_count) {
    validate_grid_request(request, /*allow_empty_axes=*/true);
    require_sample_budget(samples);

    GridValidationSummary summary;
    summary.cells.resize(request.nsr_axis.size() * request.sd_axis.size());
    for (std::size_t i = 0; i < request.nsr_axis.size(); ++i) {
        for (std::size_t j = 0; j < request.sd_axis.size(); ++j) {
            auto& cell = summary.cells[i * request.sd_axis.size() + j];
            cell.nsr = request.nsr_axis[i];
            cell.sd = request.sd_axis[j];
        }
    }

    const auto run_cell = [&](std::size_t index) {
        auto& cell = summary.cells[index];
        try {
            const DistributionSpec spec{request.family, cell.sd, request.skew};
            const ServiceabilityCase c{request.stress_factor, cell.nsr, spec,
                                       request.base_nsr};
            risk_weight(c); // an unresolvable base must fail, not skip
            const double trigger_probability = default_probability(c);
            if (trigger_probability == 1.0) {
                cell.status = GridCellStatus::SaturatedCell;
                cell.message = "saturated cell: trigger probability is exactly 1";
                return;
            }
            if (trigger_probability == 0.0) {
                cell.status = GridCellStatus::UnderflowCell;
                cell.message = "underflow cell: trigger probability is exactly 0";
                return;
            }
            cell.report = validate_case(c, samples, child_seed(seed, index));
            cell.status = GridCellStatus::Evaluated;
        } catch (const std::exception& e) {
            cell.status = GridCellStatus::Failed;
            cell.report.reset();
            cell.message = e.what();
        }
    };

    unsigned workers = worker_count != 0 ? worker_count : std::thread::hardware_concurrency();
    workers = std::max<unsigned>(1, std::min<std::size_t>(workers, summary.cells.size()));
    if (workers == 1) {
        for (std::size_t i = 0; i < summary.cells.size(); ++i) run_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < summary.cells.size();
                     i = next.fetch_add(1)) {
                    run_cell(i);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    for (const auto& cell : summary.cells) {
        switch (cell.status) {
        case GridCellStatus::Evaluated:
            ++summary.evaluated;
            if (std::abs(cell.report->z_score) > kExceedanceZ) ++summary.exceedances;
            break;
        case GridCellStatus::SaturatedCell: ++summary.saturated_skipped; break;
        case GridCellStatus::UnderflowCell: ++summary.underflow_skipped; break;
        case GridCellStatus::Failed: ++summary.failed; break;
        }
    }
    return summary;
}

} // namespace servrisk
