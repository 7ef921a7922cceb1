// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file features.hpp
 * @brief The anti-symmetric feature map eta = (phi, psi_1 phi, ..., psi_q phi).
 *
 * phi_k(x) = prod_{i<j} (w_k^T x_i - w_k^T x_j) is the Vandermonde value of
 * the k-th projection. psi_alpha(x) = sum_i prod_j x_ij^{alpha_j} are the
 * multi-symmetric power sums for every multi-index alpha in N^d with
 * 1 <= |alpha| <= n, so q = binom(n + d, d) - 1 and m = p (q + 1).
 *
 * When the spec carries a domain box, coordinates are first mapped affinely
 * onto [-1, 1]^d. The map is the identity for the box [-1, 1]^d.
 */

#pragma once

#include <antisym/geometry.hpp>
#include <antisym/types.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace antisym {

using MultiIndex = std::vector<std::uint32_t>;

/// Multi-indices alpha in N^d with 1 <= |alpha| <= max_degree, ordered by total
/// degree and lexicographically within a degree.
std::vector<MultiIndex> power_sum_indices(std::size_t d, std::size_t max_degree);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct FeatureMapSpec {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t m = 0;
    std::vector<MultiIndex> multi_indices;
    ProjectionSet projections;
    std::optional<DomainBox> box;

    static FeatureMapSpec build(std::size_t n, std::size_t d, ProjectionMode mode = ProjectionMode::Paper,
                                std::optional<DomainBox> box = std::nullopt);

    /// Stable textual identifier, e.g. "n=2,d=1,mode=paper,box=none".
    [[nodiscard]] std::string id() const;

    /// Sampling domain: the declared box or [-1, 1]^d.
    [[nodiscard]] DomainBox domain() const;

    /// d(rescaled coordinate j) / d(raw coordinate j).
    [[nodiscard]] Vector rescale_factors() const;

    /// Coordinates after the affine map onto [-1, 1]^d (identity without box).
    [[nodiscard]] Matrix rescaled(const Matrix& coords) const;

    /// Throws DimensionMismatch unless coords is n x d.
    void check_shape(const Matrix& coords) const;

    friend bool operator==(const FeatureMapSpec& a, const FeatureMapSpec& b) {
        return a.n == b.n && a.d == b.d && a.p == b.p && a.q == b.q && a.m == b.m &&
               a.multi_indices == b.multi_indices && a.projections == b.projections && a.box == b.box;
    }
};

struct FeatureVector {
    Vector values;
    std::string spec_id;
};

/// Projected scalars t_ik = w_k^T u_i of the rescaled configuration u; n x p.
Matrix projected_scalars(const FeatureMapSpec& spec, const Matrix& coords);

Vector eval_phi(const FeatureMapSpec& spec, const ParticleConfiguration& x);
Vector eval_psi(const FeatureMapSpec& spec, const ParticleConfiguration& x);
FeatureVector eval_eta(const FeatureMapSpec& spec, const ParticleConfiguration& x);

/// Assembles eta from its factors: block 0 is phi, block l is psi_l * phi.
Vector assemble_eta(const Vector& phi, const Vector& psi);

/// Elementwise eval_eta; throws DimensionMismatch naming the first bad index.
std::vector<FeatureVector> eval_eta_batch(const FeatureMapSpec& spec, std::span<const ParticleConfiguration> xs);

/// x^k by repeated multiplication; 0^0 = 1.
double ipow(double x, std::uint32_t k) noexcept;

}  // namespace antisym
