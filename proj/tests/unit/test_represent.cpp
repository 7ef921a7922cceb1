// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <antisym/error.hpp>
#include <antisym/permutation.hpp>
#include <antisym/random.hpp>
#include <antisym/represent.hpp>

#include "../oracles.hpp"

#include <cmath>
#include <numbers>

using namespace antisym;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no antisym::Error thrown");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("target names round-trip", "[represent]") {
    for (auto k : {TargetKind::Slater, TargetKind::AbsDiff, TargetKind::Pow43Diff, TargetKind::Custom}) {
        CHECK(target_kind_from_string(to_string(k)) == k);
    }
    CHECK(code_of([] { (void)target_kind_from_string("gauss"); }) == ErrorCode::ParseError);
}

TEST_CASE("target values", "[represent]") {
    SECTION("absolute difference") {
        const auto f = TargetFunction::abs_diff();
        CHECK(eval_target(f, Matrix{{0.2}, {0.0}}) == Catch::Approx(0.2).margin(1e-15));
        CHECK(eval_target(f, Matrix{{0.1}, {-0.1}}) == 0.0);
    }
    SECTION("four-thirds power difference") {
        const auto f = TargetFunction::pow43_diff();
        CHECK(eval_target(f, Matrix{{1.0}, {0.0}}) == 1.0);
        CHECK(eval_target(f, Matrix{{8.0}, {1.0}}) == Catch::Approx(15.0).epsilon(1e-14));
        CHECK(code_of([&] { (void)eval_target(f, Matrix{{0.1}, {-0.1}}); }) == ErrorCode::DomainViolation);
        const auto real = TargetFunction::pow43_diff(Pow43Domain::RealCubeRoot);
        CHECK(eval_target(real, Matrix{{0.1}, {-0.1}}) == Catch::Approx(0.0).margin(1e-16));
        CHECK(eval_target(real, Matrix{{-8.0}, {0.0}}) == Catch::Approx(16.0).epsilon(1e-14));
    }
    SECTION("two-particle sine Slater determinant") {
        const auto f = TargetFunction::slater_sine(2, 1);
        // det [[sin(pi/2), sin(pi/4)], [sin(pi), sin(pi/2)]] = 1.
        CHECK(eval_target(f, Matrix{{0.5}, {0.25}}) == Catch::Approx(1.0).epsilon(1e-14));
    }
    SECTION("Slater matches a Leibniz determinant oracle") {
        const auto f = TargetFunction::slater_sine(3, 2);
        for (std::uint64_t t = 0; t < 50; ++t) {
            auto rng = trial_rng(11, 0, t);
            const Matrix x = sample_in_box(DomainBox::symmetric_unit(2), 3, rng);
            Matrix a(3, 3);
            for (int r = 0; r < 3; ++r) {
                for (int c = 0; c < 3; ++c) {
                    a(r, c) = std::sin((r + 1) * std::numbers::pi * x.row(c).mean());
                }
            }
            CHECK(eval_target(f, x) == Catch::Approx(oracle::leibniz_det(a)).margin(1e-13));
        }
    }
    SECTION("custom and shape errors") {
        const auto f = TargetFunction::make_custom(2, 1, [](const Matrix& x) { return x(0, 0) - x(1, 0); });
        CHECK(eval_target(f, Matrix{{0.75}, {0.25}}) == 0.5);
        CHECK(code_of([&] { (void)eval_target(f, Matrix{{0.1, 0.2}, {0.3, 0.4}}); }) == ErrorCode::DimensionMismatch);
        CHECK(code_of([] { (void)TargetFunction::slater(2, 1, {}); }) == ErrorCode::InvalidArgument);
    }
}

TEST_CASE("random odd models are odd and anti-symmetric through eta", "[represent][property]") {
    const auto spec = FeatureMapSpec::build(3, 2);
    const OddModel g = random_odd_model(spec, 64, 0.5, 1.0, 21);
    CHECK(g.phases.isZero(0.0));
    for (std::uint64_t t = 0; t < 200; ++t) {
        auto rng = trial_rng(21, 1, t);
        Vector y(static_cast<Eigen::Index>(spec.m));
        for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = uniform(rng, -3.0, 3.0);
        CHECK(std::abs(g.predict(y) + g.predict(-y)) <= 1e-14 * (1.0 + std::abs(g.predict(y))));

        const Matrix x = sample_in_box(DomainBox::symmetric_unit(2), 3, rng);
        const Permutation sigma = random_permutation(3, rng);
        const double base = g.predict_configuration(x);
        const double moved = g.predict_configuration(permute_rows(x, sigma));
        CHECK(std::abs(moved - signature(sigma) * base) <= 1e-10 * (1.0 + std::abs(base)));
    }
    CHECK(g.predict(Vector::Zero(static_cast<Eigen::Index>(spec.m))) == 0.0);
}

TEST_CASE("fitting the two-particle Slater target", "[represent][fit]") {
    const auto spec = FeatureMapSpec::build(2, 1);
    FitConfig cfg;  // 2000 samples, 500 features, ridge 1e-8
    const FitResult fit = fit_odd_model(spec, TargetFunction::slater_sine(2, 1), cfg);
    INFO("holdout rmse " << fit.holdout_rmse << ", condition " << fit.condition_estimate);
    CHECK(fit.meets_threshold(cfg.rmse_threshold));
    CHECK(fit.train_rmse <= cfg.rmse_threshold);
    CHECK(fit.condition_estimate <= cfg.max_condition);
    CHECK(fit.model.feature_count == 500);
    CHECK(fit.model.input_dim == spec.m);

    SECTION("predictions at even-permuted copies coincide bitwise") {
        const auto spec3 = FeatureMapSpec::build(3, 1);
        FitConfig small;
        small.samples = 300;
        small.feature_count = 100;
        small.holdout_samples = 50;
        small.ridge = 1e-6;
        const FitResult f3 = fit_odd_model(spec3, TargetFunction::slater_sine(3, 1), small);
        for (std::uint64_t t = 0; t < 100; ++t) {
            auto rng = trial_rng(31, 0, t);
            const Matrix x = sample_in_box(DomainBox::symmetric_unit(1), 3, rng);
            const Permutation sigma = random_even_permutation(3, rng);
            CHECK(f3.model.predict_configuration(permute_rows(x, sigma)) == f3.model.predict_configuration(x));
        }
    }
}

TEST_CASE("fitting a zero target gives zero weights", "[represent][fit]") {
    const auto spec = FeatureMapSpec::build(2, 1);
    FitConfig cfg;
    cfg.samples = 400;
    cfg.feature_count = 100;
    cfg.holdout_samples = 100;
    cfg.ridge = 1e-6;
    const auto fit = fit_odd_model(spec, TargetFunction::make_custom(2, 1, [](const Matrix&) { return 0.0; }), cfg);
    CHECK(fit.train_rmse <= 1e-10);
    CHECK(fit.holdout_rmse <= 1e-10);
    CHECK(fit.model.weights.cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("fit is deterministic in its seed", "[represent][fit]") {
    const auto spec = FeatureMapSpec::build(2, 1);
    FitConfig cfg;
    cfg.samples = 200;
    cfg.feature_count = 50;
    cfg.holdout_samples = 20;
    cfg.ridge = 1e-4;
    const auto a = fit_odd_model(spec, TargetFunction::slater_sine(2, 1), cfg);
    const auto b = fit_odd_model(spec, TargetFunction::slater_sine(2, 1), cfg);
    CHECK(a.model.weights == b.model.weights);
    CHECK(a.holdout_rmse == b.holdout_rmse);
    cfg.seed = 1;
    const auto c = fit_odd_model(spec, TargetFunction::slater_sine(2, 1), cfg);
    CHECK(a.model.frequencies != c.model.frequencies);
}

TEST_CASE("fit argument validation", "[represent][fit]") {
    const auto spec = FeatureMapSpec::build(2, 1);
    const auto target = TargetFunction::slater_sine(2, 1);
    FitConfig cfg;
    cfg.samples = 10;
    cfg.feature_count = 20;
    CHECK(code_of([&] { (void)fit_odd_model(spec, target, cfg); }) == ErrorCode::InvalidArgument);
    cfg.samples = 50;
    cfg.ridge = 0.0;
    CHECK(code_of([&] { (void)fit_odd_model(spec, target, cfg); }) == ErrorCode::InvalidArgument);
    cfg.ridge = 1e-8;
    CHECK(code_of([&] { (void)fit_odd_model(spec, TargetFunction::slater_sine(3, 1), cfg); }) ==
          ErrorCode::DimensionMismatch);
    cfg.max_condition = 1.0;
    CHECK(code_of([&] { (void)fit_odd_model(spec, target, cfg); }) == ErrorCode::IllConditioned);
}

TEST_CASE("anti-symmetric targets are constant on eta fibers", "[represent]") {
    SECTION("identity permutation is trivially equal") {
        const auto f = TargetFunction::slater_sine(2, 1);
        const Matrix x{{0.3}, {-0.6}};
        CHECK(eval_target(f, permute_rows(x, identity_permutation(2))) == eval_target(f, x));
    }
    SECTION("three-particle Slater, 500 trials") {
        const auto r = check_well_defined(FeatureMapSpec::build(3, 1), TargetFunction::slater_sine(3, 1), 500, 41);
        CHECK(r.failures == 0);
        CHECK(r.trials == 1000);
        CHECK(r.property == Property::OddWellDefined);
    }
    SECTION("a symmetric target is caught") {
        const auto f = TargetFunction::make_custom(3, 1, [](const Matrix& x) { return x.sum(); });
        const auto r = check_well_defined(FeatureMapSpec::build(3, 1), f, 50, 42);
        CHECK(r.failures > 0);
    }
}

TEST_CASE("Lipschitz ratio for |x1| - |x2|", "[represent][regularity]") {
    const std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    const auto curve = lipschitz_ratio_curve(eps);
    REQUIRE(curve.size() == eps.size());
    CHECK(curve[0].value == Catch::Approx(4.975185951049945).epsilon(1e-12));
    CHECK(curve[2].value == Catch::Approx(499.9997500001875).epsilon(1e-12));
    for (std::size_t i = 0; i < curve.size(); ++i) {
        CHECK(curve[i].closed_form == Catch::Approx(1.0 / (2.0 * eps[i] * std::sqrt(1.0 + eps[i] * eps[i]))).epsilon(1e-15));
        CHECK(curve[i].rel_error <= 1e-12);
        if (i > 0) CHECK(curve[i].value > curve[i - 1].value);
    }
    const std::vector<double> bad{0.1, 0.0};
    CHECK(code_of([&] { (void)lipschitz_ratio_curve(bad); }) == ErrorCode::NonpositiveEps);
}

TEST_CASE("difference quotient for x1^{4/3} - x2^{4/3}", "[represent][regularity]") {
    const std::vector<double> eps{1e-1, 1e-2, 1e-4, 1e-6, 1e-8};
    const auto curve = c1_obstruction_curve(eps);
    CHECK(curve[0].value == Catch::Approx(2.90951).epsilon(1e-5));
    CHECK(curve[3].value == Catch::Approx(6299.605).epsilon(1e-6));
    for (std::size_t i = 0; i < curve.size(); ++i) {
        CHECK(curve[i].rel_error <= 1e-12);
        if (i > 0) CHECK(curve[i].value > curve[i - 1].value);
    }
    // q(eps) eps^{2/3} tends to 2^{4/3} / 4.
    CHECK(curve.back().value * std::pow(1e-8, 2.0 / 3.0) == Catch::Approx(0.6299605249474366).epsilon(1e-9));
    const std::vector<double> bad{-1e-3};
    CHECK(code_of([&] { (void)c1_obstruction_curve(bad); }) == ErrorCode::NonpositiveEps);
}

TEST_CASE("line-pair map has the documented shape", "[represent]") {
    const auto spec = line_pair_spec();
    CHECK(spec.p == 1);
    CHECK(spec.q == 2);
    CHECK(spec.m == 3);
    const auto eta = eval_eta(spec, Matrix{{2.0}, {0.5}}).values;
    CHECK(eta(0) == 1.5);
    CHECK(eta(1) == 1.5 * 2.5);
    CHECK(eta(2) == 1.5 * 4.25);
}
