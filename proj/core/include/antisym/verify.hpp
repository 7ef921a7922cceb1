// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file verify.hpp
 * @brief Randomized certifiers for the structural properties of eta and psi.
 *
 * Certifiers operate on a FeatureMap, i.e. a spec plus callables for eta and
 * psi, so that deliberately corrupted maps can be fed through the same code
 * to confirm the checks are not vacuous. Every certifier is a deterministic
 * function of (map, trials, seed): trial t draws from trial_rng(seed, salt, t).
 */

#pragma once

#include <antisym/features.hpp>
#include <antisym/report.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

namespace antisym {

struct FeatureMap {
    FeatureMapSpec spec;
    std::function<Vector(const Matrix&)> eta;
    std::function<Vector(const Matrix&)> psi;

    /// The map built from eval_eta / eval_psi.
    static FeatureMap standard(FeatureMapSpec spec);
};

enum class Mutation {
    None,
    /// eta_0 replaced by |eta_0|, a symmetric function.
    SignFlip,
    /// Block 1 loses its phi factor and becomes psi_1 alone.
    DroppedFactor,
    /// All psi-weighted blocks are zeroed, leaving only phi.
    DroppedBlock,
    /// Every psi component of degree >= 2 is replaced by a copy of psi_1.
    DuplicatedPsi,
};

std::string_view to_string(Mutation mutation) noexcept;
Mutation mutation_from_string(std::string_view name);

FeatureMap mutate(FeatureMap map, Mutation mutation);

struct Tolerances {
    /// Relative error for equalities that hold exactly in real arithmetic.
    double equality = 1e-10;
    /// Scale of the "eta = 0" threshold; multiplied by (1 + |x|_inf)^{n(n-1)/2}.
    double zero = 1e-12;
    /// Minimum relative max-norm gap |a - b| / max(|a|, |b|) between features of distinct orbits.
    double separation = 1e-10;
    /// Minimum pairwise particle distance for "distinct" samples.
    double distinct_gap = 1e-3;
    /// Rows closer than this are identified by the orbit oracle.
    double orbit_match = 1e-12;
};

/// eta(sigma x) = sgn(sigma) eta(x). All sigma for n <= 4, otherwise
/// kRandomPermutationsPerSample random ones per sample.
CertificationReport certify_antisymmetry(const FeatureMap& map, std::size_t trials, std::uint64_t seed,
                                         const Tolerances& tol = {});

/// psi(sigma x) = psi(x), same permutation plan as certify_antisymmetry.
CertificationReport certify_psi_symmetry(const FeatureMap& map, std::size_t trials, std::uint64_t seed,
                                         const Tolerances& tol = {});

/// eta vanishes on forced collisions and is nonzero on well-separated
/// samples; `trials` samples per direction.
CertificationReport certify_zero_iff_collision(const FeatureMap& map, std::size_t trials, std::uint64_t seed,
                                               const Tolerances& tol = {});

/// Even permutations leave eta unchanged; configurations off each other's
/// orbit have features at least tol.separation apart, relative to their scale. Besides independent
/// draws, negative pairs include common translations, which keep every phi_k,
/// and opposite two-particle displacements, which keep the degree-1 power sums.
CertificationReport certify_orbit_separation(const FeatureMap& map, std::size_t trials, std::uint64_t seed,
                                             const Tolerances& tol = {});

/// As certify_orbit_separation, but on psi over all permutations and with
/// repeated particles allowed in the samples.
CertificationReport certify_psi_separation(const FeatureMap& map, std::size_t trials, std::uint64_t seed,
                                           const Tolerances& tol = {});

inline constexpr std::size_t kExhaustivePermutationMaxN = 4;
inline constexpr std::size_t kRandomPermutationsPerSample = 24;

}  // namespace antisym
