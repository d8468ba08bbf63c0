#include <servrisk/risk_model.hpp>

#include <servrisk/errors.hpp>

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

using namespace servrisk;

namespace {

LoanProfile make_profile(double base_pd, double base_lgd, WeightLedger pd_weights = {},
                         WeightLedger lgd_weights = {}) {
    LoanProfileParams params;
    params.base_pd = base_pd;
    params.base_lgd = base_lgd;
    params.pd_weights = std::move(pd_weights);
    params.lgd_weights = std::move(lgd_weights);
    return LoanProfile{params};
}

/// Sequential ledger product at extended precision, clamped like adjusted_pd.
double slow_adjusted_pd(double base, const WeightLedger& weights, double floor, double cap) {
    long double product = base;
    for (const auto& entry : weights) product *= entry.factor;
    const long double clamped = std::min<long double>(cap, std::max<long double>(floor, product));
    return static_cast<double>(clamped);
}

} // namespace

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(make_profile(0.0, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(make_profile(1.5, 0.2), std::invalid_argument);
    CHECK_THROWS_AS(make_profile(0.01, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_profile(0.01, -0.2), std::invalid_argument);
    CHECK_THROWS_AS(make_profile(std::nan(""), 0.2), std::invalid_argument);
    CHECK_NOTHROW(make_profile(1.0, 1.0));

    CHECK_THROWS_AS(make_profile(0.01, 0.2, {{"A", -0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(make_profile(0.01, 0.2, {{"A", std::nan("")}}), std::invalid_argument);
    CHECK_THROWS_AS(make_profile(0.01, 0.2, {{"", 1.0}}), std::invalid_argument);
    CHECK_NOTHROW(make_profile(0.01, 0.2, {{"A", 0.0}}));

    SUBCASE("floor and cap") {
        LoanProfileParams params;
        params.base_pd = 0.01;
        params.base_lgd = 0.2;
        params.pd_floor = 0.6;
        params.pd_cap = 0.4;
        CHECK_THROWS_AS(LoanProfile{params}, std::invalid_argument);
        params.pd_floor = 0.0;
        params.pd_cap = 1.5;
        CHECK_THROWS_AS(LoanProfile{params}, std::invalid_argument);
        params.pd_cap = 1.0;
        params.pd_floor = -0.1;
        CHECK_THROWS_AS(LoanProfile{params}, std::invalid_argument);
    }

    SUBCASE("duplicate names within a ledger conflict") {
        CHECK_THROWS_AS(make_profile(0.01, 0.2, {{"A", 0.5}, {"A", 0.7}}), WeightConflictError);
        CHECK_THROWS_AS(make_profile(0.01, 0.2, {}, {{"B", 0.5}, {"B", 0.7}}),
                        WeightConflictError);
        // The two ledgers are independent namespaces.
        CHECK_NOTHROW(make_profile(0.01, 0.2, {{"A", 0.5}}, {{"A", 0.7}}));
    }

    SUBCASE("appending weights") {
        auto profile = make_profile(0.01, 0.2, {{"A", 0.5}});
        profile.add_pd_weight({"B", 2.0});
        CHECK(profile.pd_weights().size() == 2);
        CHECK(profile.pd_weights()[1].name == "B");
        CHECK_THROWS_AS(profile.add_pd_weight({"A", 1.0}), WeightConflictError);
        profile.add_lgd_weight({"A", 1.5});
        CHECK(profile.lgd_weights().size() == 1);
        CHECK_THROWS_AS(profile.add_lgd_weight({"A", 1.0}), WeightConflictError);
    }
}

TEST_CASE("adjusted pd") {
    CHECK(adjusted_pd(make_profile(0.01, 0.2)) == 0.01);

    const auto weighted = make_profile(0.01, 0.2, {{"NSR", 0.74}});
    CHECK(std::fabs(adjusted_pd(weighted) - 0.0074) < 1e-15);

    const auto capped = make_profile(0.5, 0.2, {{"NSR", 6.30}});
    CHECK(adjusted_pd(capped) == 1.0);

    SUBCASE("floor binds") {
        LoanProfileParams params;
        params.base_pd = 0.01;
        params.base_lgd = 0.2;
        params.pd_weights = {{"A", 0.0}};
        params.pd_floor = 0.005;
        CHECK(adjusted_pd(LoanProfile{params}) == 0.005);
    }
    SUBCASE("custom cap binds") {
        LoanProfileParams params;
        params.base_pd = 0.1;
        params.base_lgd = 0.2;
        params.pd_weights = {{"A", 4.0}};
        params.pd_cap = 0.25;
        CHECK(adjusted_pd(LoanProfile{params}) == 0.25);
    }
}

TEST_CASE("adjusted lgd") {
    CHECK(adjusted_lgd(make_profile(0.01, 0.2)) == 0.2);
    CHECK(adjusted_lgd(make_profile(0.01, 0.8, {}, {{"collateral", 0.5}})) == 0.4);
    // LGD clamps to [0, 1] regardless of the PD floor/cap settings.
    CHECK(adjusted_lgd(make_profile(0.01, 0.8, {}, {{"collateral", 2.0}})) == 1.0);
}

TEST_CASE("expected loss") {
    CHECK(expected_loss(make_profile(0.01, 0.2)) == 0.002);

    const auto weighted = make_profile(0.01, 0.2, {{"NSR", 0.74}});
    CHECK(std::fabs(expected_loss(weighted) - 0.00148) < 1e-15);

    const auto identity =
        make_profile(0.037, 0.41, {{"A", 1.0}, {"B", 1.0}}, {{"C", 1.0}});
    CHECK(expected_loss(identity) == 0.037 * 0.41);

    CHECK(expected_loss(make_profile(0.5, 0.5, {{"A", 0.0}})) == 0.0);
}

TEST_CASE("ledger product is permutation invariant") {
    std::mt19937_64 rng{11};
    std::uniform_real_distribution<double> log_factor{-3.0, 1.0};
    std::uniform_int_distribution<int> size_dist{2, 12};
    for (int trial = 0; trial < 200; ++trial) {
        WeightLedger ledger;
        const int size = size_dist(rng);
        for (int i = 0; i < size; ++i) {
            ledger.push_back({"w" + std::to_string(i), std::exp(log_factor(rng))});
        }
        const double reference = adjusted_pd(make_profile(0.02, 0.5, ledger));
        std::shuffle(ledger.begin(), ledger.end(), rng);
        const double shuffled = adjusted_pd(make_profile(0.02, 0.5, ledger));
        CHECK(std::fabs(shuffled - reference) <= 1e-12 * std::max(reference, 1e-300));
    }
}

TEST_CASE("adjusted pd matches a high-precision sequential product") {
    std::mt19937_64 rng{13};
    std::uniform_real_distribution<double> log_factor{-2.0, 2.0};
    std::uniform_real_distribution<double> base_dist{1e-4, 1.0};
    std::uniform_int_distribution<int> size_dist{0, 10};
    std::bernoulli_distribution zero_factor{0.05};
    for (int trial = 0; trial < 200; ++trial) {
        LoanProfileParams params;
        params.base_pd = base_dist(rng);
        params.base_lgd = 0.3;
        const int size = size_dist(rng);
        for (int i = 0; i < size; ++i) {
            const double factor = zero_factor(rng) ? 0.0 : std::exp(log_factor(rng));
            params.pd_weights.push_back({"w" + std::to_string(i), factor});
        }
        const double expected =
            slow_adjusted_pd(params.base_pd, params.pd_weights, params.pd_floor, params.pd_cap);
        const double got = adjusted_pd(LoanProfile{params});
        CHECK(std::fabs(got - expected) <= 1e-12 * std::max(expected, 1e-300));
    }
}

TEST_CASE("differential contract: adjusted pd scales with base pd") {
    std::mt19937_64 rng{17};
    std::uniform_real_distribution<double> log_factor{-1.5, 1.5};
    std::uniform_real_distribution<double> base_dist{1e-5, 1e-3};
    for (int trial = 0; trial < 100; ++trial) {
        WeightLedger ledger;
        for (int i = 0; i < 5; ++i) {
            ledger.push_back({"w" + std::to_string(i), std::exp(log_factor(rng))});
        }
        const double base_a = base_dist(rng);
        const double base_b = base_dist(rng);
        const double adjusted_a = adjusted_pd(make_profile(base_a, 0.2, ledger));
        const double adjusted_b = adjusted_pd(make_profile(base_b, 0.2, ledger));
        // Bases small enough that no clamp binds.
        const double got = adjusted_a / adjusted_b;
        const double expected = base_a / base_b;
        CHECK(std::fabs(got - expected) <= 1e-12 * expected);
    }
}

TEST_CASE("expected loss is monotone in each factor") {
    const WeightLedger pd_ledger{{"A", 0.5}, {"B", 2.0}, {"C", 1.3}};
    const WeightLedger lgd_ledger{{"D", 0.8}};
    const double before = expected_loss(make_profile(0.02, 0.4, pd_ledger, lgd_ledger));
    for (std::size_t i = 0; i < pd_ledger.size(); ++i) {
        auto bumped = pd_ledger;
        bumped[i].factor *= 1.1;
        CHECK(expected_loss(make_profile(0.02, 0.4, bumped, lgd_ledger)) >= before);
    }
    auto bumped_lgd = lgd_ledger;
    bumped_lgd[0].factor *= 1.1;
    CHECK(expected_loss(make_profile(0.02, 0.4, pd_ledger, bumped_lgd)) >= before);

    // Once the cap binds, further increases leave EL unchanged rather than lower.
    const auto capped = make_profile(0.9, 0.4, {{"A", 5.0}});
    const auto more = make_profile(0.9, 0.4, {{"A", 50.0}});
    CHECK(expected_loss(more) >= expected_loss(capped));
    CHECK(expected_loss(more) == expected_loss(capped));
}

TEST_CASE("attach serviceability") {
    const auto base_case = ServiceabilityCase{0.9, 1.0, DistributionSpec::normal(0.20)};
    const auto headline = ServiceabilityCase{0.9, 1.1, DistributionSpec::normal(0.30)};

    SUBCASE("appends the weight under the reserved name") {
        const auto plain = make_profile(0.01, 0.2);
        const auto attached = attach_serviceability(plain, base_case);
        REQUIRE(attached.pd_weights().size() == 1);
        CHECK(attached.pd_weights()[0].name == kServiceabilityWeightName);
        CHECK(attached.pd_weights()[0].factor == 1.0);
        // Value semantics: the input profile is untouched.
        CHECK(plain.pd_weights().empty());
    }
    SUBCASE("headline factor") {
        const auto attached = attach_serviceability(make_profile(0.01, 0.2), headline);
        REQUIRE(attached.pd_weights().size() == 1);
        CHECK(std::fabs(attached.pd_weights()[0].factor - 0.74) < 0.005);
        CHECK(attached.pd_weights()[0].factor == risk_weight(headline));
        CHECK(std::fabs(adjusted_pd(attached) - 0.0074) < 5e-5);
    }
    SUBCASE("existing weights are preserved and ordered first") {
        const auto attached = attach_serviceability(
            make_profile(0.01, 0.2, {{"region", 1.2}}), headline);
        REQUIRE(attached.pd_weights().size() == 2);
        CHECK(attached.pd_weights()[0].name == "region");
        CHECK(attached.pd_weights()[1].name == kServiceabilityWeightName);
    }
    SUBCASE("double attachment conflicts") {
        const auto attached = attach_serviceability(make_profile(0.01, 0.2), headline);
        CHECK_THROWS_AS(attach_serviceability(attached, base_case), WeightConflictError);
        const auto manual =
            make_profile(0.01, 0.2, {{kServiceabilityWeightName, 0.5}});
        CHECK_THROWS_AS(attach_serviceability(manual, base_case), WeightConflictError);
    }
}
