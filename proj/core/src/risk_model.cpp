#include "servrisk/risk_model.hpp"

#include "servrisk/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace servrisk {

namespace {

void require_unit_interval(double value, const char* what) {
    if (!(value >= 0.0) || !(value <= 1.0)) {
        throw std::invalid_argument(std::string{what} + " must lie in [0, 1]");
    }
}

void require_positive_fraction(double value, const char* what) {
    if (!(value > 0.0) || !(value <= 1.0)) {
        throw std::invalid_argument(std::string{what} + " must lie in (0, 1]");
    }
}

void require_valid_ledger(const WeightLedger& ledger, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& entry : ledger) {
        if (entry.name.empty()) {
            throw std::invalid_argument(std::string{what} + " entries must be named");
        }
        if (!std::isfinite(entry.factor) || entry.factor < 0.0) {
            throw std::invalid_argument(std::string{what} + " factor for '" + entry.name +
                                        "' must be finite and non-negative");
        }
        if (!seen.insert(entry.name).second) {
            throw WeightConflictError("duplicate weight '" + entry.name + "' in " + what);
        }
    }
}

void require_absent(const WeightLedger& ledger, const std::string& name, const char* what) {
    for (const auto& entry : ledger) {
        if (entry.name == name) {
            throw WeightConflictError("duplicate weight '" + name + "' in " + what);
        }
    }
}

double ledger_product(const WeightLedger& ledger) {
    double product = 1.0;
    for (const auto& entry : ledger) product *= entry.factor;
    return product;
}

} // namespace

LoanProfile::LoanProfile(LoanProfileParams params) : params_(std::move(params)) {
    require_positive_fraction(params_.base_pd, "base_pd");
    require_positive_fraction(params_.base_lgd, "base_lgd");
    require_unit_interval(params_.pd_floor, "pd_floor");
    require_unit_interval(params_.pd_cap, "pd_cap");
    if (params_.pd_floor > params_.pd_cap) {
        throw std::invalid_argument("pd_floor must not exceed pd_cap");
    }
    require_valid_ledger(params_.pd_weights, "pd_weights");
    require_valid_ledger(params_.lgd_weights, "lgd_weights");
}

void LoanProfile::add_pd_weight(WeightEntry entry) {
    WeightLedger candidate{entry};
    require_valid_ledger(candidate, "pd_weights");
    require_absent(params_.pd_weights, entry.name, "pd_weights");
    params_.pd_weights.push_back(std::move(entry));
}

void LoanProfile::add_lgd_weight(WeightEntry entry) {
    WeightLedger candidate{entry};
    require_valid_ledger(candidate, "lgd_weights");
    require_absent(params_.lgd_weights, entry.name, "lgd_weights");
    params_.lgd_weights.push_back(std::move(entry));
}

double adjusted_pd(const LoanProfile& profile) {
    const double raw = profile.base_pd() * ledger_product(profile.pd_weights());
    return std::clamp(raw, profile.pd_floor(), profile.pd_cap());
}

double adjusted_lgd(const LoanProfile& profile) {
    const double raw = profile.base_lgd() * ledger_product(profile.lgd_weights());
    return std::clamp(raw, 0.0, 1.0);
}

double expected_loss(const LoanProfile& profile) {
    return adjusted_pd(profile) * adjusted_lgd(profile);
}

LoanProfile attach_serviceability(LoanProfile profile, const ServiceabilityCase& c) {
    profile.add_pd_weight({kServiceabilityWeightName, risk_weight(c)});
    return profile;
}

} // namespace servrisk
