// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file represent.hpp
 * @brief Odd outer models g with f ~= g o eta, plus the targets and
 *        regularity counterexamples for g.
 *
 * An OddModel is a pure-sine random feature expansion
 *
 *     g(y) = sum_r w_r sin(omega_r^T y + phase_r),   phase_r = 0,
 *
 * so g(-y) = -g(y) holds term by term and g(0) = 0. Weights come from a
 * closed-form ridge solve of (Phi^T Phi / N + lambda I) w = Phi^T f / N.
 */

#pragma once

#include <antisym/features.hpp>
#include <antisym/report.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace antisym {

enum class TargetKind { Slater, AbsDiff, Pow43Diff, Custom };

std::string_view to_string(TargetKind kind) noexcept;
TargetKind target_kind_from_string(std::string_view name);

/// How t^{4/3} is read for negative t.
enum class Pow43Domain {
    /// Only t >= 0 is accepted; negative coordinates raise DomainViolation.
    NonNegative,
    /// Real cube root: t^{4/3} = (cbrt t)^4 = |t|^{4/3}.
    RealCubeRoot,
};

using Orbital = std::function<double(const Vector& point)>;

struct TargetFunction {
    TargetKind kind = TargetKind::Slater;
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<Orbital> orbitals;                    ///< Slater only
    std::function<double(const Matrix&)> custom;      ///< Custom only
    Pow43Domain pow43_domain = Pow43Domain::NonNegative;

    /// Orbitals sin(a pi t), a = 1..n, with t the mean of the particle's coordinates.
    static TargetFunction slater_sine(std::size_t n, std::size_t d);
    static TargetFunction slater(std::size_t n, std::size_t d, std::vector<Orbital> orbitals);
    /// |x_1| - |x_2| for two particles on a line.
    static TargetFunction abs_diff();
    /// x_1^{4/3} - x_2^{4/3} for two particles on a line.
    static TargetFunction pow43_diff(Pow43Domain domain = Pow43Domain::NonNegative);
    static TargetFunction make_custom(std::size_t n, std::size_t d, std::function<double(const Matrix&)> f);
};

/// f(x). Slater returns det[orbital_a(x_b)].
double eval_target(const TargetFunction& t, const ParticleConfiguration& x);

struct OddModel {
    FeatureMapSpec spec;
    std::size_t feature_count = 0;
    std::size_t input_dim = 0;
    Matrix frequencies;  ///< feature_count x input_dim
    Vector phases;       ///< all zero
    Vector weights;
    double ridge = 0.0;
    double bandwidth = 1.0;  ///< frequencies were drawn as N(0, I) * bandwidth
    std::uint64_t seed = 0;

    /// Random features sin(omega_r^T y + phase_r), length feature_count.
    [[nodiscard]] Vector features(const Vector& y) const;
    [[nodiscard]] double predict(const Vector& y) const;
    /// predict(eta(x)).
    [[nodiscard]] double predict_configuration(const ParticleConfiguration& x) const;
};

/// Untrained model with frequencies drawn from `seed` and the given weights scale.
OddModel random_odd_model(const FeatureMapSpec& spec, std::size_t feature_count, double bandwidth, double weight_scale,
                          std::uint64_t seed);

struct FitConfig {
    std::size_t samples = 2000;
    std::size_t feature_count = 500;
    double ridge = 1e-8;
    std::uint64_t seed = 0;
    std::size_t holdout_samples = 500;
    /// Largest accepted eigenvalue ratio of the regularized normal matrix.
    double max_condition = 1e14;
    /// Acceptance threshold on the held-out RMSE; reported, not enforced.
    double rmse_threshold = 1e-2;
};

struct FitResult {
    OddModel model;
    double train_rmse = 0.0;
    double holdout_rmse = 0.0;
    double condition_estimate = 0.0;

    [[nodiscard]] bool meets_threshold(double threshold) const noexcept { return holdout_rmse <= threshold; }
};

/// Draws training and held-out configurations uniformly from spec.domain(),
/// maps them through eta, and solves the ridge problem in closed form.
/// Throws InvalidArgument unless samples >= feature_count and ridge > 0,
/// IllConditioned when the condition estimate exceeds max_condition.
FitResult fit_odd_model(const FeatureMapSpec& spec, const TargetFunction& t, const FitConfig& config);

/// Fiber constancy of f along eta: f(sigma x) = f(x) for even sigma, and
/// f = 0 on forced collisions. `trials` samples per direction.
CertificationReport check_well_defined(const FeatureMapSpec& spec, const TargetFunction& t, std::size_t trials,
                                       std::uint64_t seed, double tol = 1e-10);

/// The two-particle, one-dimensional map used by the regularity examples:
/// phi = x_1 - x_2, psi = (x_1 + x_2, x_1^2 + x_2^2), no rescaling.
FeatureMapSpec line_pair_spec();

struct CurvePoint {
    double eps = 0.0;
    double value = 0.0;
    double closed_form = 0.0;
    double rel_error = 0.0;
};

/// |f(x) - f(x')| / |eta(x) - eta(x')|_2 for f = |x_1| - |x_2|, x = (2 eps, 0),
/// x' = (eps, -eps). Closed form 1 / (2 eps sqrt(1 + eps^2)).
std::vector<CurvePoint> lipschitz_ratio_curve(std::span<const double> eps_list);

/// (f(x) - f(x')) / |eta(x) - eta(x')|_2 for f = x_1^{4/3} - x_2^{4/3} on the same
/// pair. Closed form 2^{4/3} / (4 eps^{2/3} sqrt(1 + eps^2)).
std::vector<CurvePoint> c1_obstruction_curve(std::span<const double> eps_list);

}  // namespace antisym
