// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file calculus.hpp
 * @brief Jacobians of eta and their numerical rank on and off the singular locus.
 *
 * The Jacobian is m x (n d) with column i * d + j holding d eta / d x_ij.
 * Two routes are provided: second-order central differences and exact
 * polynomial derivatives (product rule on the Vandermonde factors and the
 * power sums). The two are kept independent so each can check the other.
 */

#pragma once

#include <antisym/features.hpp>
#include <antisym/report.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace antisym {

enum class JacobianMethod { CentralDifference, ExactPolynomial };

std::string_view to_string(JacobianMethod method) noexcept;

struct JacobianResult {
    Matrix matrix;
    JacobianMethod method = JacobianMethod::ExactPolynomial;
    /// Base step; the step for coordinate x_ij is step * (1 + |x_ij|).
    std::optional<double> step;
    Vector singular_values;  ///< descending, length min(m, n d)
    std::size_t numerical_rank = 0;
    double rank_tolerance = 0.0;

    [[nodiscard]] bool full_column_rank() const noexcept {
        return numerical_rank == static_cast<std::size_t>(matrix.cols());
    }
};

struct SpectrumInfo {
    Vector singular_values;
    std::size_t numerical_rank = 0;
    double rank_tolerance = 0.0;
};

/// Singular values and numerical rank; the default tolerance is
/// max(rows, cols) * eps * sigma_max.
SpectrumInfo spectrum(const Matrix& matrix, std::optional<double> rank_tolerance = std::nullopt);

JacobianResult jacobian(const FeatureMapSpec& spec, const ParticleConfiguration& x, JacobianMethod method,
                        std::optional<double> rank_tolerance = std::nullopt);

/// Central-difference Jacobian of an arbitrary map of the configuration.
Matrix central_difference_jacobian(const std::function<Vector(const Matrix&)>& f, const Matrix& coords);

/// cbrt(machine epsilon).
double central_difference_base_step() noexcept;

/// Exact d phi / d x, p x (n d).
Matrix exact_jacobian_phi(const FeatureMapSpec& spec, const Matrix& coords);
/// Exact d psi / d x, q x (n d).
Matrix exact_jacobian_psi(const FeatureMapSpec& spec, const Matrix& coords);
/// Exact d eta / d x, m x (n d).
Matrix exact_jacobian_eta(const FeatureMapSpec& spec, const Matrix& coords);

/// Pairs (i1 < i2) of particles that coincide exactly or lie within `tol`.
std::vector<std::pair<std::size_t, std::size_t>> colliding_pairs(const Matrix& coords, double tol = 1e-12);

/// Membership in the collision locus: some pair coincides within `tol`.
bool in_singular_locus(const Matrix& coords, double tol = 1e-12);

/// max over colliding pairs (i1, i2) and coordinates j of
/// |column(i1, j) + column(i2, j)|_inf of the exact Jacobian.
/// Throws NoCollision when x has no colliding pair.
double check_singular_column_pairs(const FeatureMapSpec& spec, const ParticleConfiguration& x);

/// Samples configurations with pairwise gap >= distinct_gap and checks
/// sigma_min / sigma_max > min_ratio for the exact Jacobian. The violation
/// measure is sigma_max / sigma_min against the tolerance 1 / min_ratio.
/// Throws SpecTooSmall when m < n d.
CertificationReport check_full_rank_off_singular(const FeatureMapSpec& spec, std::size_t trials, std::uint64_t seed,
                                                 double min_ratio = 1e-8, double distinct_gap = 1e-3);

/// max over blocks l >= 1 of |J(psi_l phi) - psi_l J phi - phi grad(psi_l)^T|_max,
/// with the left side by central differences and the factors exact.
double check_product_rule_blocks(const FeatureMapSpec& spec, const ParticleConfiguration& x);

}  // namespace antisym
