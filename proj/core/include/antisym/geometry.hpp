// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file geometry.hpp
 * @brief Projection directions in generic position.
 *
 * A ProjectionSet holds p unit vectors w_1..w_p in R^d such that any d of
 * them form a basis. For n distinct particles, at least one w_k then maps
 * the particles to n distinct scalars w_k^T x_i, provided p exceeds
 * n(n-1)/2 * (d-1). Two counts are supported:
 *
 *   Paper:    p = n(n-1)/2 * (d-1) + 1
 *   Improved: p = d*n + 1
 *
 * Vectors are points on the moment curve (1, t, t^2, ..., t^{d-1}) at nodes
 * t_k = k / (p + 1), normalized to unit length. Any d of them stack into a
 * row-scaled Vandermonde matrix with distinct nodes, hence are independent.
 */

#pragma once

#include <antisym/types.hpp>

#include <cstddef>
#include <optional>
#include <string_view>

namespace antisym {

enum class ProjectionMode { Paper, Improved };

std::string_view to_string(ProjectionMode mode) noexcept;
ProjectionMode projection_mode_from_string(std::string_view name);

/// Number of projections required for n particles in R^d.
std::size_t projection_count(std::size_t n, std::size_t d, ProjectionMode mode);

struct ProjectionSet {
    std::size_t n = 0;
    std::size_t d = 0;
    ProjectionMode mode = ProjectionMode::Paper;
    Matrix vectors;  ///< p x d, row k is w_k

    [[nodiscard]] std::size_t p() const noexcept { return static_cast<std::size_t>(vectors.rows()); }

    /// Wraps explicit vectors (rows), normalizing each to unit length. The
    /// generic-position property is the caller's responsibility.
    static ProjectionSet from_vectors(std::size_t n, std::size_t d, ProjectionMode mode, const Matrix& rows);

    friend bool operator==(const ProjectionSet& a, const ProjectionSet& b) {
        return a.n == b.n && a.d == b.d && a.mode == b.mode && a.vectors == b.vectors;
    }
};

ProjectionSet build_projection_set(std::size_t n, std::size_t d, ProjectionMode mode = ProjectionMode::Paper);

/// 1e-9 * (1 + max |x_ij|).
double default_separation_tolerance(const Matrix& coords);

struct SeparationOptions {
    /// Particles closer than this (Euclidean) count as colliding.
    double collision_tol = 0.0;
    /// Required gap between projected values; defaults to default_separation_tolerance(x).
    std::optional<double> separation_tol;
};

/// Smallest 0-based k such that all pairwise projected values w_k^T x_i differ
/// by more than the separation tolerance, or nullopt when no index clears it.
/// Throws CollidingInput when two particles coincide within collision_tol,
/// DimensionMismatch when the configuration is not n x d.
std::optional<std::size_t> find_separating_projection(const ProjectionSet& w, const ParticleConfiguration& x,
                                                      const SeparationOptions& options = {});

}  // namespace antisym
