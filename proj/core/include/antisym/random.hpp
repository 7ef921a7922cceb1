// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <antisym/types.hpp>

#include <cstdint>
#include <random>

namespace antisym {

/// splitmix64 finalizer; used to derive independent per-trial streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

/// Engine for trial `index` of a run seeded with `seed`. Streams are a pure
/// function of (seed, salt, index), so results do not depend on evaluation order.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t salt, std::uint64_t index);

double uniform(std::mt19937_64& rng, double lo, double hi);

/// n x d matrix with coordinate j drawn uniformly from [lower_j, upper_j].
Matrix sample_in_box(const DomainBox& box, std::size_t n, std::mt19937_64& rng);

/// Smallest pairwise Euclidean distance between particles; +inf when n < 2.
double min_pairwise_distance(const Matrix& coords);

/// Rejection-samples a configuration whose particles are pairwise at least `gap` apart.
Matrix sample_distinct_in_box(const DomainBox& box, std::size_t n, double gap, std::mt19937_64& rng);

}  // namespace antisym
