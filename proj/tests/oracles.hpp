// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracles.hpp
 * @brief Test-only reference computations.
 *
 * Nothing here calls into the library's evaluation paths. Determinants use
 * the Leibniz expansion and permutation signs come from inversion counts.
 */

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

namespace antisym::oracle {

inline int inversion_sign(const std::vector<std::size_t>& perm) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

/// det(M) = sum_sigma sgn(sigma) prod_i M(i, sigma(i)).
inline double leibniz_det(const Eigen::MatrixXd& m) {
    const auto n = static_cast<std::size_t>(m.rows());
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    double total = 0.0;
    do {
        double term = inversion_sign(perm);
        for (std::size_t i = 0; i < n; ++i) term *= m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm[i]));
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Vandermonde matrix with rows (1, t_i, ..., t_i^{n-1}).
inline Eigen::MatrixXd vandermonde(const Eigen::VectorXd& t) {
    const Eigen::Index n = t.size();
    Eigen::MatrixXd v(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) v(i, j) = std::pow(t(i), static_cast<double>(j));
    }
    return v;
}

/// sum_i prod_j x_ij^{alpha_j} with std::pow.
inline double power_sum(const Eigen::MatrixXd& x, const std::vector<unsigned>& alpha) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        double term = 1.0;
        for (Eigen::Index j = 0; j < x.cols(); ++j) term *= std::pow(x(i, j), static_cast<double>(alpha[static_cast<std::size_t>(j)]));
        total += term;
    }
    return total;
}

/// Row i of the result is row perm[i] of x.
inline Eigen::MatrixXd reorder(const Eigen::MatrixXd& x, const std::vector<std::size_t>& perm) {
    Eigen::MatrixXd out(x.rows(), x.cols());
    for (std::size_t i = 0; i < perm.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = x.row(static_cast<Eigen::Index>(perm[i]));
    return out;
}

/// Every permutation of {0..n-1}.
inline std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<std::vector<std::size_t>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace antisym::oracle
