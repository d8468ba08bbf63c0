#include <servrisk/mc_oracle.hpp>
#include <servrisk/serviceability.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace servrisk;

void BM_cdf(benchmark::State& state) {
    const DistributionSpec spec = DistributionSpec::normal(0.30);
    double x = 0.2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cdf(spec, x));
        x = x < 1.8 ? x + 1e-6 : 0.2;
    }
}
BENCHMARK(BM_cdf);

void BM_quantile(benchmark::State& state) {
    const DistributionSpec spec = DistributionSpec::normal(0.30);
    double p = 0.01;
    for (auto _ : state) {
        benchmark::DoNotOptimize(quantile(spec, p));
        p = p < 0.99 ? p + 1e-6 : 0.01;
    }
}
BENCHMARK(BM_quantile);

void BM_skew_cdf(benchmark::State& state) {
    const DistributionSpec spec = DistributionSpec::skew_normal(0.30, -3.0);
    double x = 0.2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cdf(spec, x));
        x = x < 1.8 ? x + 1e-6 : 0.2;
    }
}
BENCHMARK(BM_skew_cdf);

void BM_risk_weight(benchmark::State& state) {
    const DistributionSpec spec = DistributionSpec::normal(0.30);
    double n = 0.2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(risk_weight({0.9, n, spec}));
        n = n < 2.0 ? n + 1e-6 : 0.2;
    }
}
BENCHMARK(BM_risk_weight);

void BM_grid_default(benchmark::State& state) {
    GridRequest request;
    for (int i = 2; i <= 20; ++i) request.nsr_axis.push_back(i / 10.0);
    for (int j = 10; j <= 40; j += 5) request.sd_axis.push_back(j / 100.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(risk_weight_grid(request));
    }
}
BENCHMARK(BM_grid_default);

void BM_sampler_draw(benchmark::State& state) {
    Sampler sampler{DistributionSpec::normal(0.30), 42};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler.next());
    }
}
BENCHMARK(BM_sampler_draw);

void BM_skew_sampler_draw(benchmark::State& state) {
    Sampler sampler{DistributionSpec::skew_normal(0.30, -3.0), 42};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler.next());
    }
}
BENCHMARK(BM_skew_sampler_draw);

void BM_oracle_cell(benchmark::State& state) {
    const ServiceabilityCase c{0.9, 1.1, DistributionSpec::normal(0.30)};
    const auto samples = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(validate_case(c, samples, 1));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(samples));
}
BENCHMARK(BM_oracle_cell)->Arg(100000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
