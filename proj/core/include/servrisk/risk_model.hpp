#pragma once

#include "servrisk/serviceability.hpp"

#include <string>
#include <vector>

namespace servrisk {

/// One named multiplicative adjustment applied to a base rate.
struct WeightEntry {
    std::string name;
    double factor = 1.0;
};

using WeightLedger = std::vector<WeightEntry>;

struct LoanProfileParams {
    double base_pd = 0.0;
    double base_lgd = 0.0;
    WeightLedger pd_weights;
    WeightLedger lgd_weights;
    double pd_floor = 0.0;
    double pd_cap = 1.0;
};

/// A loan's base default probability and loss-given-default together with
/// the ordered ledgers of named multiplicative weights applied to each.
/// Weight names are unique within a ledger so that each risk driver enters
/// the product exactly once and can be attributed or replaced independently.
class LoanProfile {
  public:
    explicit LoanProfile(LoanProfileParams params);

    double base_pd() const { return params_.base_pd; }
    double base_lgd() const { return params_.base_lgd; }
    double pd_floor() const { return params_.pd_floor; }
    double pd_cap() const { return params_.pd_cap; }
    const WeightLedger& pd_weights() const { return params_.pd_weights; }
    const WeightLedger& lgd_weights() const { return params_.lgd_weights; }

    /// Appends a named weight to the PD ledger.
    /// Throws WeightConflictError if the name is already present.
    void add_pd_weight(WeightEntry entry);

    /// Appends a named weight to the LGD ledger.
    /// Throws WeightConflictError if the name is already present.
    void add_lgd_weight(WeightEntry entry);

  private:
    LoanProfileParams params_;
};

/// Base PD times the full PD weight product, clamped to [pd_floor, pd_cap].
double adjusted_pd(const LoanProfile& profile);

/// Base LGD times the full LGD weight product, clamped to [0, 1].
double adjusted_lgd(const LoanProfile& profile);

/// Expected loss rate: adjusted PD times adjusted LGD.
double expected_loss(const LoanProfile& profile);

/// Name under which the serviceability risk weight enters a PD ledger.
inline constexpr const char* kServiceabilityWeightName = "NSR";

/// Returns a copy of the profile with the serviceability risk weight for `c`
/// appended to the PD ledger under kServiceabilityWeightName; the input
/// profile is untouched.
/// Throws WeightConflictError if a weight with that name already exists.
LoanProfile attach_serviceability(LoanProfile profile, const ServiceabilityCase& c);

} // namespace servrisk
