#include "run.hpp"

#include "render.hpp"

#include <servrisk/mc_oracle.hpp>
#include <servrisk/risk_model.hpp>
#include <servrisk/serviceability.hpp>

#include <fstream>
#include <ostream>

namespace servrisk::cli {

namespace {

GridRequest grid_request(const RunConfig& config) {
    GridRequest request;
    request.stress_factor = config.stress_factor;
    request.nsr_axis = config.nsr_axis;
    request.sd_axis = config.sd_axis;
    request.family = config.family;
    request.skew = config.skew;
    request.base_nsr = config.base_nsr;
    return request;
}

int write_document(const RunConfig& config, const std::string& document, std::ostream& out,
                   std::ostream& err) {
    if (!config.output_path) {
        out << document;
        return kExitSuccess;
    }
    std::ofstream file{*config.output_path, std::ios::binary};
    if (!file) {
        err << "config error: 'output': cannot open '" << *config.output_path
            << "' for writing\n";
        return kExitConfigError;
    }
    file << document;
    file.flush();
    if (!file) {
        err << "config error: 'output': failed writing '" << *config.output_path << "'\n";
        return kExitConfigError;
    }
    return kExitSuccess;
}

int run_grid(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const RiskWeightGrid grid = risk_weight_grid(grid_request(config));
        return write_document(config, render_grid(grid, config.format), out, err);
    } catch (const std::exception& e) {
        err << "computation error: " << e.what() << '\n';
        return kExitComputationError;
    }
}

int run_score(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        LoanProfileParams params;
        params.base_pd = *config.base_pd;
        params.base_lgd = *config.base_lgd;
        params.pd_weights = config.pd_weights;
        params.lgd_weights = config.lgd_weights;
        params.pd_floor = config.pd_floor;
        params.pd_cap = config.pd_cap;
        LoanProfile profile{params};
        if (config.nsr) {
            const DistributionSpec spec{config.family, *config.sd, config.skew};
            const ServiceabilityCase c{config.stress_factor, *config.nsr, spec,
                                       config.base_nsr};
            profile = attach_serviceability(std::move(profile), c);
        }
        return write_document(config, render_score(profile, config.format), out, err);
    } catch (const std::exception& e) {
        err << "computation error: " << e.what();
        if (config.nsr) {
            err << " (case: stress_factor=" << format_double(config.stress_factor)
                << ", nsr=" << format_double(*config.nsr)
                << ", sd=" << format_double(*config.sd)
                << ", base_nsr=" << format_double(config.base_nsr) << ")";
        }
        err << '\n';
        return kExitComputationError;
    }
}

int run_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const GridValidationSummary summary =
            validate_grid(grid_request(config), config.samples, config.seed, config.workers);
        const int write_status =
            write_document(config, render_validation(summary, config, config.format), out, err);
        err << "validate: " << summarize_validation(summary) << '\n';
        if (write_status != kExitSuccess) return write_status;
        for (const auto& cell : summary.cells) {
            if (cell.status == GridCellStatus::Failed) {
                err << "computation error: cell (nsr=" << format_double(cell.nsr)
                    << ", sd=" << format_double(cell.sd) << "): " << cell.message << '\n';
                return kExitComputationError;
            }
        }
        return kExitSuccess;
    } catch (const std::exception& e) {
        err << "computation error: " << e.what() << '\n';
        return kExitComputationError;
    }
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    switch (config.command) {
    case Command::Grid: return run_grid(config, out, err);
    case Command::Score: return run_score(config, out, err);
    case Command::Validate: return run_validate(config, out, err);
    }
    return kExitComputationError;
}

} // namespace servrisk::cli
