#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace servrisk {

enum class DistributionFamily { Normal, SkewNormal };

/// Distribution of a migrating quantity in mean-relative form: the quantity
/// is expressed as a fraction of its assessed value, so the distribution has
/// mean 1 and standard deviation `relative_sd` by construction. Risk weights
/// built on it are scale invariant: the assessed level cancels out.
class DistributionSpec {
public:
    /// Throws std::invalid_argument unless relative_sd is positive and
    /// finite, skew is finite, and skew == 0 for the Normal family.
    DistributionSpec(DistributionFamily family, double relative_sd, double skew = 0.0);

    static DistributionSpec normal(double relative_sd) {
        return {DistributionFamily::Normal, relative_sd};
    }
    static DistributionSpec skew_normal(double relative_sd, double skew) {
        return {DistributionFamily::SkewNormal, relative_sd, skew};
    }

    DistributionFamily family() const noexcept { return family_; }
    double relative_sd() const noexcept { return relative_sd_; }
    double skew() const noexcept { return skew_; }

private:
    DistributionFamily family_;
    double relative_sd_;
    double skew_;
};

/// Values beyond this many relative standard deviations from the mean are
/// treated as certain: cdf saturates to exactly 0 or 1 there, so downstream
/// ratios never divide meaningless denormals.
inline constexpr double kTailCutoffSds = 8.0;

/// Lower-tail probability P(X <= x). Monotone non-decreasing in x, saturates
/// to exactly 0/1 beyond kTailCutoffSds. Throws std::domain_error for
/// non-finite x.
double cdf(const DistributionSpec& spec, double x);

/// Upper-tail probability P(X > x), computed directly rather than as
/// 1 - cdf(x) so deep-tail values keep relative accuracy. Same saturation
/// and domain rules as cdf.
double upper_tail(const DistributionSpec& spec, double x);

/// Inverse of cdf on (0, 1): cdf(spec, quantile(spec, p)) == p to ~1e-14 for
/// p away from the saturated tails. Strictly increasing in p. Throws
/// std::domain_error unless 0 < p < 1.
double quantile(const DistributionSpec& spec, double p);

/// Deterministic stream of draws from a spec. Two samplers built from the
/// same (spec, seed) produce bitwise-identical streams on any platform;
/// all state is owned by the instance, so distinct samplers never interact.
///
/// Normal draws are inverse-transform samples through quantile(). SkewNormal
/// draws combine two normals (scaled |Z0| plus an independent Z1), then
/// re-standardise to mean 1 / sd relative_sd, so no rejection loop is needed
/// and the draw count per sample is fixed.
class Sampler {
public:
    Sampler(const DistributionSpec& spec, std::uint64_t seed);

    double next();

private:
    double next_uniform();

    DistributionSpec spec_;
    std::mt19937_64 rng_;
    double delta_ = 0.0;     // skew-normal shape as a correlation
    double resid_ = 1.0;     // sqrt(1 - delta^2)
    double sn_mean_ = 0.0;   // mean of the unit skew-normal
    double sn_sd_ = 1.0;     // sd of the unit skew-normal
};

/// Materialised convenience form of Sampler. count must be >= 1.
std::vector<double> sample(const DistributionSpec& spec, std::uint64_t seed, std::size_t count);

namespace detail {

/// Standard normal lower tail via erfc, no saturation cutoff.
double standard_normal_cdf(double z);

/// Standard normal quantile: rational approximation refined by one Halley
/// step against the erfc-based cdf.
double standard_normal_quantile(double p);

} // namespace detail

} // namespace servrisk
