#include "servrisk/serviceability.hpp"

#include "servrisk/errors.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace servrisk {

namespace {

void require_positive_finite(double value, const char* what) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw std::invalid_argument(std::string{what} + " must be positive and finite");
    }
}

/// Lower tail with the trigger ratio allowed to overflow: stress_factor/nsr
/// can exceed double range for extreme NSR values, and an infinite ratio is
/// simply a certainty, not a domain error.
double tail_below(const DistributionSpec& spec, double ratio) {
    if (std::isinf(ratio)) return ratio > 0.0 ? 1.0 : 0.0;
    return cdf(spec, ratio);
}

double tail_above(const DistributionSpec& spec, double ratio) {
    if (std::isinf(ratio)) return ratio > 0.0 ? 0.0 : 1.0;
    return upper_tail(spec, ratio);
}

double tail_ratio(const DistributionSpec& spec, double trigger, double base_trigger,
                  TriggerDirection direction) {
    const bool below = direction == TriggerDirection::BelowTriggers;
    const double base = below ? tail_below(spec, base_trigger) : tail_above(spec, base_trigger);
    if (base == 0.0) {
        throw UnresolvableBaseError(
            "base trigger tail probability is exactly zero; the risk weight has no resolvable base");
    }
    const double num = below ? tail_below(spec, trigger) : tail_above(spec, trigger);
    return num / base;
}

} // namespace

AssessedLoan::AssessedLoan(double assessed_income, double stressed_income,
                           double stressed_repayment)
    : assessed_income_(assessed_income),
      stressed_income_(stressed_income),
      stressed_repayment_(stressed_repayment) {
    require_positive_finite(assessed_income, "assessed_income");
    require_positive_finite(stressed_income, "stressed_income");
    require_positive_finite(stressed_repayment, "stressed_repayment");
    if (stressed_income > assessed_income) {
        throw std::invalid_argument("stressed_income cannot exceed assessed_income");
    }
}

double nsr(const AssessedLoan& loan) {
    return loan.stressed_income() / loan.stressed_repayment();
}

RepaymentSnapshot::RepaymentSnapshot(double income, double repayment)
    : income_(income), repayment_(repayment) {
    require_positive_finite(income, "income");
    require_positive_finite(repayment, "repayment");
}

double rcr(const RepaymentSnapshot& snapshot) {
    return snapshot.income() / snapshot.repayment();
}

bool in_default(const RepaymentSnapshot& snapshot) {
    return rcr(snapshot) < 1.0;
}

ServiceabilityCase::ServiceabilityCase(double stress_factor, double nsr,
                                       DistributionSpec distribution, double base_nsr,
                                       std::string horizon_label)
    : stress_factor_(stress_factor),
      nsr_(nsr),
      distribution_(distribution),
      base_nsr_(base_nsr),
      horizon_label_(std::move(horizon_label)) {
    if (!std::isfinite(stress_factor) || stress_factor <= 0.0 || stress_factor > 1.0) {
        throw std::invalid_argument("stress_factor must lie in (0, 1]");
    }
    require_positive_finite(nsr, "nsr");
    require_positive_finite(base_nsr, "base_nsr");
}

double default_probability(const ServiceabilityCase& c) {
    return tail_below(c.distribution(), c.stress_factor() / c.nsr());
}

double risk_weight(const ServiceabilityCase& c) {
    return tail_ratio(c.distribution(), c.stress_factor() / c.nsr(),
                      c.stress_factor() / c.base_nsr(), TriggerDirection::BelowTriggers);
}

double threshold_risk_weight(const DistributionSpec& distribution, double trigger_ratio,
                             double base_trigger_ratio, TriggerDirection direction) {
    if (!std::isfinite(trigger_ratio) || !std::isfinite(base_trigger_ratio)) {
        throw std::domain_error("trigger ratios must be finite");
    }
    return tail_ratio(distribution, trigger_ratio, base_trigger_ratio, direction);
}

void validate_grid_request(const GridRequest& request, bool allow_empty_axes) {
    if (!std::isfinite(request.stress_factor) || request.stress_factor <= 0.0 ||
        request.stress_factor > 1.0) {
        throw std::invalid_argument("stress_factor must lie in (0, 1]");
    }
    require_positive_finite(request.base_nsr, "base_nsr");
    if (request.family == DistributionFamily::Normal && request.skew != 0.0) {
        throw std::invalid_argument("Normal family requires skew == 0");
    }
    if (!std::isfinite(request.skew)) {
        throw std::invalid_argument("skew must be finite");
    }
    const auto check_axis = [&](const std::vector<double>& axis, const char* name) {
        if (axis.empty()) {
            if (allow_empty_axes) return;
            throw std::invalid_argument(std::string{name} + " must not be empty");
        }
        double prev = 0.0;
        for (double v : axis) {
            if (!std::isfinite(v) || v <= 0.0) {
                throw std::invalid_argument(std::string{name} + " values must be positive and finite");
            }
            if (v <= prev) {
                throw std::invalid_argument(std::string{name} + " must be strictly increasing");
            }
            prev = v;
        }
    };
    check_axis(request.nsr_axis, "nsr_axis");
    check_axis(request.sd_axis, "sd_axis");
}

RiskWeightGrid risk_weight_grid(const GridRequest& request) {
    validate_grid_request(request);
    RiskWeightGrid grid{request.stress_factor, request.base_nsr, request.nsr_axis,
                        request.sd_axis, {}};
    grid.values.reserve(request.nsr_axis.size());
    for (double n : request.nsr_axis) {
        std::vector<double> row;
        row.reserve(request.sd_axis.size());
        for (double sd : request.sd_axis) {
            try {
                const DistributionSpec spec{request.family, sd, request.skew};
                row.push_back(risk_weight(
                    {request.stress_factor, n, spec, request.base_nsr}));
            } catch (const UnresolvableBaseError& e) {
                std::ostringstream msg;
                msg << e.what() << " (at nsr=" << n << ", sd=" << sd << ")";
                throw UnresolvableBaseError(msg.str());
            }
        }
        grid.values.push_back(std::move(row));
    }
    return grid;
}

} // namespace servrisk
