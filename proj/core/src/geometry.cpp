// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/error.hpp>
#include <antisym/geometry.hpp>
#include <antisym/random.hpp>

#include <cmath>
#include <string>

namespace antisym {

std::string_view to_string(ProjectionMode mode) noexcept {
    return mode == ProjectionMode::Paper ? "paper" : "improved";
}

ProjectionMode projection_mode_from_string(std::string_view name) {
    if (name == "paper" || name == "Paper") return ProjectionMode::Paper;
    if (name == "improved" || name == "Improved") return ProjectionMode::Improved;
    throw Error(ErrorCode::ParseError, "unknown projection mode '" + std::string(name) + "'");
}

std::size_t projection_count(std::size_t n, std::size_t d, ProjectionMode mode) {
    if (n < 1 || d < 1) throw Error(ErrorCode::InvalidArgument, "projection count needs n >= 1 and d >= 1");
    if (mode == ProjectionMode::Improved) return d * n + 1;
    return n * (n - 1) / 2 * (d - 1) + 1;
}

ProjectionSet ProjectionSet::from_vectors(std::size_t n, std::size_t d, ProjectionMode mode, const Matrix& rows) {
    if (static_cast<std::size_t>(rows.cols()) != d || rows.rows() < 1) {
        throw Error(ErrorCode::DimensionMismatch, "projection vectors must be a non-empty p x d matrix");
    }
    ProjectionSet w{n, d, mode, rows};
    for (Eigen::Index k = 0; k < w.vectors.rows(); ++k) {
        const double norm = w.vectors.row(k).norm();
        if (!(norm > 0.0)) throw Error(ErrorCode::InvalidArgument, "projection vectors must be nonzero");
        w.vectors.row(k) /= norm;
    }
    return w;
}

ProjectionSet build_projection_set(std::size_t n, std::size_t d, ProjectionMode mode) {
    const std::size_t p = projection_count(n, d, mode);
    Matrix rows(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(d));
    for (std::size_t k = 0; k < p; ++k) {
        const double t = static_cast<double>(k + 1) / static_cast<double>(p + 1);
        double power = 1.0;
        for (std::size_t j = 0; j < d; ++j) {
            rows(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = power;
            power *= t;
        }
    }
    return ProjectionSet::from_vectors(n, d, mode, rows);
}

double default_separation_tolerance(const Matrix& coords) {
    const double scale = coords.size() == 0 ? 0.0 : coords.cwiseAbs().maxCoeff();
    return 1e-9 * (1.0 + scale);
}

std::optional<std::size_t> find_separating_projection(const ProjectionSet& w, const ParticleConfiguration& x,
                                                      const SeparationOptions& options) {
    if (x.d() != w.d) throw Error(ErrorCode::DimensionMismatch, "configuration dimension differs from projection set");
    const Matrix& coords = x.coords();
    if (min_pairwise_distance(coords) <= options.collision_tol) {
        throw Error(ErrorCode::CollidingInput, "two particles coincide");
    }
    const double sep = options.separation_tol.value_or(default_separation_tolerance(coords));
    const Matrix projected = coords * w.vectors.transpose();  // n x p
    for (Eigen::Index k = 0; k < projected.cols(); ++k) {
        bool separated = true;
        for (Eigen::Index i = 0; i < projected.rows() && separated; ++i) {
            for (Eigen::Index j = i + 1; j < projected.rows(); ++j) {
                if (std::abs(projected(i, k) - projected(j, k)) <= sep) {
                    separated = false;
                    break;
                }
            }
        }
        if (separated) return static_cast<std::size_t>(k);
    }
    return std::nullopt;
}

}  // namespace antisym
