// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/calculus.hpp>
#include <antisym/random.hpp>
#include <antisym/represent.hpp>
#include <antisym/verify.hpp>

#include <benchmark/benchmark.h>

using namespace antisym;

namespace {

Matrix sample(const FeatureMapSpec& spec) {
    auto rng = trial_rng(1, 0, 0);
    return sample_in_box(spec.domain(), spec.n, rng);
}

void BM_EvalEta(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto d = static_cast<std::size_t>(state.range(1));
    const auto spec = FeatureMapSpec::build(n, d);
    const Matrix x = sample(spec);
    for (auto _ : state) benchmark::DoNotOptimize(eval_eta(spec, x));
    state.counters["m"] = static_cast<double>(spec.m);
}
BENCHMARK(BM_EvalEta)->Args({2, 1})->Args({3, 2})->Args({4, 3})->Args({6, 3});

void BM_Jacobian(benchmark::State& state) {
    const auto method = state.range(0) == 0 ? JacobianMethod::ExactPolynomial : JacobianMethod::CentralDifference;
    const auto spec = FeatureMapSpec::build(4, 3);
    const Matrix x = sample(spec);
    for (auto _ : state) benchmark::DoNotOptimize(jacobian(spec, x, method));
    state.SetLabel(std::string(to_string(method)));
}
BENCHMARK(BM_Jacobian)->Arg(0)->Arg(1);

void BM_CertifyAntisymmetry(benchmark::State& state) {
    const auto map = FeatureMap::standard(FeatureMapSpec::build(4, 3));
    for (auto _ : state) benchmark::DoNotOptimize(certify_antisymmetry(map, 100, 1));
}
BENCHMARK(BM_CertifyAntisymmetry)->Unit(benchmark::kMillisecond);

void BM_FitOddModel(benchmark::State& state) {
    const auto spec = FeatureMapSpec::build(2, 1);
    FitConfig cfg;
    cfg.feature_count = static_cast<std::size_t>(state.range(0));
    cfg.samples = 4 * cfg.feature_count;
    cfg.holdout_samples = cfg.feature_count;
    for (auto _ : state) benchmark::DoNotOptimize(fit_odd_model(spec, TargetFunction::slater_sine(2, 1), cfg));
}
BENCHMARK(BM_FitOddModel)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
