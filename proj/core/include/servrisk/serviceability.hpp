#pragma once

#include "servrisk/distribution.hpp"

#include <string>
#include <vector>

namespace servrisk {

/// A loan as assessed at application time: unstressed income, stressed
/// income and the stressed minimum repayment. All amounts share one
/// currency/period unit; only their ratios matter downstream.
class AssessedLoan {
public:
    /// Throws std::invalid_argument unless every amount is positive and
    /// finite and stressed_income <= assessed_income.
    AssessedLoan(double assessed_income, double stressed_income, double stressed_repayment);

    double assessed_income() const noexcept { return assessed_income_; }
    double stressed_income() const noexcept { return stressed_income_; }
    double stressed_repayment() const noexcept { return stressed_repayment_; }

private:
    double assessed_income_;
    double stressed_income_;
    double stressed_repayment_;
};

/// Net servicing ratio: stressed income over stressed minimum repayment.
double nsr(const AssessedLoan& loan);

/// Income and required repayment observed at some point in the loan's life.
class RepaymentSnapshot {
public:
    RepaymentSnapshot(double income, double repayment);

    double income() const noexcept { return income_; }
    double repayment() const noexcept { return repayment_; }

private:
    double income_;
    double repayment_;
};

/// Repayment coverage ratio: actual income over actual repayment.
double rcr(const RepaymentSnapshot& snapshot);

/// A loan is in default when coverage drops below 1, i.e. income no longer
/// meets the repayment obligation.
bool in_default(const RepaymentSnapshot& snapshot);

/// One serviceability query: how risky is NSR `nsr` relative to `base_nsr`,
/// given an income stress factor and an income distribution. The horizon
/// label is free-text documentation of the migration window being modelled;
/// it never enters the maths.
class ServiceabilityCase {
public:
    /// Throws std::invalid_argument unless 0 < stress_factor <= 1 and both
    /// NSR values are positive and finite.
    ServiceabilityCase(double stress_factor, double nsr, DistributionSpec distribution,
                       double base_nsr = 1.0, std::string horizon_label = {});

    double stress_factor() const noexcept { return stress_factor_; }
    double nsr() const noexcept { return nsr_; }
    const DistributionSpec& distribution() const noexcept { return distribution_; }
    double base_nsr() const noexcept { return base_nsr_; }
    const std::string& horizon_label() const noexcept { return horizon_label_; }

private:
    double stress_factor_;
    double nsr_;
    DistributionSpec distribution_;
    double base_nsr_;
    std::string horizon_label_;
};

/// Probability that relative income migrates below the coverage-1 threshold
/// stress_factor / nsr. Meaningful only in ratios between NSR levels — it
/// ignores every other characteristic of the loan — which is why scored
/// output exposes risk weights rather than this value.
double default_probability(const ServiceabilityCase& c);

/// Serviceability risk weight: default_probability at the case NSR divided
/// by default_probability at the base NSR. Equals exactly 1 at the base.
/// Saturates cleanly: numerator pinned to 1 when stress_factor/nsr is past
/// the upper tail cutoff, exact 0 when past the lower one. Throws
/// UnresolvableBaseError when the base probability is exactly zero.
double risk_weight(const ServiceabilityCase& c);

enum class TriggerDirection { BelowTriggers, AboveTriggers };

/// Generalised form of risk_weight for any migrating quantity that defaults
/// on crossing a trigger level: ratio of tail probabilities at trigger vs
/// base trigger, lower tail for BelowTriggers (income-like quantities),
/// upper tail for AboveTriggers (e.g. loan-to-value in limited recourse
/// lending). risk_weight(c) == threshold_risk_weight(dist, f/N, f/base,
/// BelowTriggers) identically.
double threshold_risk_weight(const DistributionSpec& distribution, double trigger_ratio,
                             double base_trigger_ratio, TriggerDirection direction);

/// Parameters for one risk-weight table: an NSR axis by dispersion axis
/// grid at a fixed stress factor.
struct GridRequest {
    double stress_factor = 0.9;
    std::vector<double> nsr_axis;
    std::vector<double> sd_axis;
    DistributionFamily family = DistributionFamily::Normal;
    double skew = 0.0;
    double base_nsr = 1.0;
};

/// Validates ranges, ordering and positivity of a request. Empty axes are
/// rejected unless allow_empty_axes is set (grid validation treats an empty
/// grid as an empty result rather than an error).
void validate_grid_request(const GridRequest& request, bool allow_empty_axes = false);

/// Tabulated risk weights: values[i][j] is the weight at nsr_axis[i],
/// sd_axis[j]. The row at base_nsr is all exactly 1.
struct RiskWeightGrid {
    double stress_factor = 0.9;
    double base_nsr = 1.0;
    std::vector<double> nsr_axis;
    std::vector<double> sd_axis;
    std::vector<std::vector<double>> values;
};

/// Evaluates risk_weight over the full grid. Cell failures are rethrown
/// with the offending (nsr, sd) coordinates in the message.
RiskWeightGrid risk_weight_grid(const GridRequest& request);

} // namespace servrisk
