// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file types.hpp
 * @brief Core value types: particle configurations and domain boxes.
 *
 * A configuration of n particles in R^d is stored as an n x d matrix whose
 * row i is particle i. Jacobian columns use the particle-major flattening
 * (i, j) -> i * d + j throughout the library.
 */

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <vector>

namespace antisym {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Axis-aligned compact domain Omega = prod_j [lower_j, upper_j] in R^d.
struct DomainBox {
    Vector lower;
    Vector upper;

    /// The box [-1, 1]^d.
    static DomainBox symmetric_unit(std::size_t d);

    [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(lower.size()); }
    [[nodiscard]] bool contains(const Matrix& coords) const;
    [[nodiscard]] bool is_symmetric_unit() const;

    /// Throws InvalidArgument unless lower_j < upper_j for every coordinate.
    void validate() const;

    friend bool operator==(const DomainBox& a, const DomainBox& b) {
        return a.lower == b.lower && a.upper == b.upper;
    }
};

/// A point (x_1, ..., x_n) of Omega^n.
class ParticleConfiguration {
public:
    ParticleConfiguration(Matrix coords);  // NOLINT(google-explicit-constructor)
    ParticleConfiguration(Matrix coords, DomainBox box);

    [[nodiscard]] std::size_t n() const noexcept { return static_cast<std::size_t>(coords_.rows()); }
    [[nodiscard]] std::size_t d() const noexcept { return static_cast<std::size_t>(coords_.cols()); }
    [[nodiscard]] const Matrix& coords() const noexcept { return coords_; }
    [[nodiscard]] const std::optional<DomainBox>& box() const noexcept { return box_; }

    /// Configuration with rows reordered so that row i of the result is row perm[i] of this one.
    [[nodiscard]] ParticleConfiguration permuted(const std::vector<std::size_t>& perm) const;

private:
    Matrix coords_;
    std::optional<DomainBox> box_;
};

/// Flattens a configuration in particle-major order.
Vector flatten(const Matrix& coords);
Matrix unflatten(const Vector& flat, std::size_t n, std::size_t d);

}  // namespace antisym
