// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file permutation.hpp
 * @brief Permutations of particle indices: enumeration, signature, orbit tests.
 */

#pragma once

#include <antisym/types.hpp>

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace antisym {

using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t n);

/// +1 for even permutations, -1 for odd ones.
int signature(const Permutation& perm);

/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

/// The even permutations (alternating group) in lexicographic order.
std::vector<Permutation> even_permutations(std::size_t n);

Permutation random_permutation(std::size_t n, std::mt19937_64& rng);

/// Uniformly random even permutation; identity when n < 3.
Permutation random_even_permutation(std::size_t n, std::mt19937_64& rng);

/// Row i of the result is row perm[i] of coords.
Matrix permute_rows(const Matrix& coords, const Permutation& perm);

/// Largest n for which orbit membership is decided by enumerating S_n.
inline constexpr std::size_t kMaxExhaustiveOrbitN = 6;

/// Exhaustive orbit test: is b = sigma . a for some sigma, rows compared within tol (max-norm)?
/// Throws OrbitCheckInfeasible for n > kMaxExhaustiveOrbitN.
bool same_orbit_exhaustive(const Matrix& a, const Matrix& b, double tol);

/// Orbit test by canonical ordering: both configurations are sorted along a
/// projection that separates the particles of a, then compared row by row.
bool same_orbit_canonical(const Matrix& a, const Matrix& b, double tol);

/// Exhaustive for small n, canonical otherwise.
bool same_orbit(const Matrix& a, const Matrix& b, double tol);

}  // namespace antisym
