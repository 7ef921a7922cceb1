// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/error.hpp>
#include <antisym/random.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace antisym {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t salt, std::uint64_t index) {
    return std::mt19937_64(mix_seed(mix_seed(seed, salt), index));
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    // 53 random bits -> [0, 1); avoids relying on the library's distribution.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

Matrix sample_in_box(const DomainBox& box, std::size_t n, std::mt19937_64& rng) {
    Matrix coords(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(box.dim()));
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
        for (Eigen::Index j = 0; j < coords.cols(); ++j) coords(i, j) = uniform(rng, box.lower(j), box.upper(j));
    }
    return coords;
}

double min_pairwise_distance(const Matrix& coords) {
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < coords.rows(); ++j) {
            best = std::min(best, (coords.row(i) - coords.row(j)).norm());
        }
    }
    return best;
}

Matrix sample_distinct_in_box(const DomainBox& box, std::size_t n, double gap, std::mt19937_64& rng) {
    constexpr int kMaxAttempts = 100000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Matrix coords = sample_in_box(box, n, rng);
        if (min_pairwise_distance(coords) >= gap) return coords;
    }
    throw Error(ErrorCode::InvalidArgument, "could not sample a configuration with the requested particle gap");
}

}  // namespace antisym
