#pragma once

#include <stdexcept>

namespace servrisk {

/// Thrown when a risk-weight denominator (the tail probability at the base
/// trigger) evaluates to exactly zero, so the ratio has no resolvable base.
class UnresolvableBaseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a Monte Carlo run observes no events below the base threshold
/// and the ratio estimator cannot be formed.
class OracleUnderpoweredError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a weight ledger would hold two entries with the same name.
/// Each risk characteristic carries exactly one weight.
class WeightConflictError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace servrisk
