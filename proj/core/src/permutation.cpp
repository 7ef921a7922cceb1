// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/error.hpp>
#include <antisym/geometry.hpp>
#include <antisym/permutation.hpp>

#include <algorithm>
#include <numeric>

namespace antisym {

Permutation identity_permutation(std::size_t n) {
    Permutation perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    return perm;
}

int signature(const Permutation& perm) {
    // Parity from the cycle decomposition: each cycle of length L contributes L - 1 transpositions.
    std::vector<bool> seen(perm.size(), false);
    std::size_t transpositions = 0;
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (seen[start]) continue;
        std::size_t length = 0;
        for (std::size_t i = start; !seen[i]; i = perm[i]) {
            if (perm[i] >= perm.size()) throw Error(ErrorCode::InvalidArgument, "not a permutation");
            seen[i] = true;
            ++length;
        }
        transpositions += length - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<Permutation> out;
    Permutation perm = identity_permutation(n);
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<Permutation> even_permutations(std::size_t n) {
    std::vector<Permutation> out;
    for (auto& perm : all_permutations(n)) {
        if (signature(perm) == 1) out.push_back(std::move(perm));
    }
    return out;
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
    Permutation perm = identity_permutation(n);
    // Fisher-Yates with an explicit bounded draw so the sequence is portable.
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

Permutation random_even_permutation(std::size_t n, std::mt19937_64& rng) {
    if (n < 3) return identity_permutation(n);
    Permutation perm = random_permutation(n, rng);
    if (signature(perm) == -1) std::swap(perm[0], perm[1]);
    return perm;
}

Matrix permute_rows(const Matrix& coords, const Permutation& perm) {
    if (perm.size() != static_cast<std::size_t>(coords.rows())) {
        throw Error(ErrorCode::DimensionMismatch, "permutation length differs from particle count");
    }
    Matrix out(coords.rows(), coords.cols());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out.row(static_cast<Eigen::Index>(i)) = coords.row(static_cast<Eigen::Index>(perm[i]));
    }
    return out;
}

namespace {

bool rows_match(const Matrix& a, const Matrix& b, double tol) {
    return ((a - b).cwiseAbs().maxCoeff() <= tol);
}

void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "orbit comparison needs configurations of equal shape");
    }
}

Matrix sorted_by(const Matrix& coords, const Vector& direction) {
    const Vector proj = coords * direction;
    Permutation order = identity_permutation(static_cast<std::size_t>(coords.rows()));
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const auto ii = static_cast<Eigen::Index>(i);
        const auto jj = static_cast<Eigen::Index>(j);
        if (proj(ii) != proj(jj)) return proj(ii) < proj(jj);
        // Lexicographic tie-break for exactly equal projections.
        for (Eigen::Index c = 0; c < coords.cols(); ++c) {
            if (coords(ii, c) != coords(jj, c)) return coords(ii, c) < coords(jj, c);
        }
        return false;
    });
    return permute_rows(coords, order);
}

}  // namespace

bool same_orbit_exhaustive(const Matrix& a, const Matrix& b, double tol) {
    check_same_shape(a, b);
    const auto n = static_cast<std::size_t>(a.rows());
    if (n > kMaxExhaustiveOrbitN) {
        throw Error(ErrorCode::OrbitCheckInfeasible, "exhaustive orbit check is limited to n <= 6");
    }
    Permutation perm = identity_permutation(n);
    do {
        if (rows_match(permute_rows(a, perm), b, tol)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool same_orbit_canonical(const Matrix& a, const Matrix& b, double tol) {
    check_same_shape(a, b);
    const auto n = static_cast<std::size_t>(a.rows());
    const auto d = static_cast<std::size_t>(a.cols());
    const ProjectionSet w = build_projection_set(n, d, ProjectionMode::Paper);
    Vector direction = w.vectors.row(0).transpose();
    try {
        if (const auto k = find_separating_projection(w, ParticleConfiguration(a))) {
            direction = w.vectors.row(static_cast<Eigen::Index>(*k)).transpose();
        }
    } catch (const Error& e) {
        if (e.code() != ErrorCode::CollidingInput) throw;
    }
    return rows_match(sorted_by(a, direction), sorted_by(b, direction), tol);
}

bool same_orbit(const Matrix& a, const Matrix& b, double tol) {
    if (static_cast<std::size_t>(a.rows()) <= kMaxExhaustiveOrbitN) return same_orbit_exhaustive(a, b, tol);
    return same_orbit_canonical(a, b, tol);
}

}  // namespace antisym
