// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/calculus.hpp>
#include <antisym/error.hpp>
#include <antisym/random.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace antisym {

namespace {

constexpr std::uint64_t kSaltFullRank = 0xE1;

Eigen::Index col_of(std::size_t particle, std::size_t coord, std::size_t d) {
    return static_cast<Eigen::Index>(particle * d + coord);
}

}  // namespace

std::string_view to_string(JacobianMethod method) noexcept {
    return method == JacobianMethod::CentralDifference ? "central-difference" : "exact-polynomial";
}

double central_difference_base_step() noexcept { return std::cbrt(std::numeric_limits<double>::epsilon()); }

SpectrumInfo spectrum(const Matrix& matrix, std::optional<double> rank_tolerance) {
    SpectrumInfo info;
    if (matrix.size() == 0) return info;
    Eigen::JacobiSVD<Matrix> svd(matrix);
    info.singular_values = svd.singularValues();
    const double sigma_max = info.singular_values.size() > 0 ? info.singular_values(0) : 0.0;
    const auto dim = static_cast<double>(std::max(matrix.rows(), matrix.cols()));
    info.rank_tolerance = rank_tolerance.value_or(dim * std::numeric_limits<double>::epsilon() * sigma_max);
    info.numerical_rank = static_cast<std::size_t>((info.singular_values.array() > info.rank_tolerance).count());
    return info;
}

Matrix central_difference_jacobian(const std::function<Vector(const Matrix&)>& f, const Matrix& coords) {
    const double base = central_difference_base_step();
    const Vector f0 = f(coords);
    Matrix jac(f0.size(), coords.size());
    const auto d = static_cast<std::size_t>(coords.cols());
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
        for (Eigen::Index j = 0; j < coords.cols(); ++j) {
            const double h = base * (1.0 + std::abs(coords(i, j)));
            Matrix plus = coords;
            Matrix minus = coords;
            plus(i, j) += h;
            minus(i, j) -= h;
            // Divide by the representable step actually taken.
            const double span = plus(i, j) - minus(i, j);
            jac.col(col_of(static_cast<std::size_t>(i), static_cast<std::size_t>(j), d)) = (f(plus) - f(minus)) / span;
        }
    }
    return jac;
}

Matrix exact_jacobian_phi(const FeatureMapSpec& spec, const Matrix& coords) {
    const Matrix t = projected_scalars(spec, coords);  // n x p
    const Vector scale = spec.rescale_factors();
    const Matrix& w = spec.projections.vectors;
    const std::size_t n = spec.n;
    const std::size_t d = spec.d;
    Matrix jac = Matrix::Zero(static_cast<Eigen::Index>(spec.p), static_cast<Eigen::Index>(n * d));
    if (n < 2) return jac;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    std::vector<double> factor(pairs.size());
    std::vector<double> prefix(pairs.size() + 1);
    std::vector<double> suffix(pairs.size() + 1);
    Vector dphi_dt(static_cast<Eigen::Index>(n));

    for (Eigen::Index k = 0; k < t.cols(); ++k) {
        for (std::size_t r = 0; r < pairs.size(); ++r) {
            factor[r] = t(static_cast<Eigen::Index>(pairs[r].first), k) - t(static_cast<Eigen::Index>(pairs[r].second), k);
        }
        // Leave-one-factor-out products; no division, so exact zeros are handled.
        prefix[0] = 1.0;
        for (std::size_t r = 0; r < pairs.size(); ++r) prefix[r + 1] = prefix[r] * factor[r];
        suffix[pairs.size()] = 1.0;
        for (std::size_t r = pairs.size(); r-- > 0;) suffix[r] = suffix[r + 1] * factor[r];

        dphi_dt.setZero();
        for (std::size_t r = 0; r < pairs.size(); ++r) {
            const double others = prefix[r] * suffix[r + 1];
            dphi_dt(static_cast<Eigen::Index>(pairs[r].first)) += others;
            dphi_dt(static_cast<Eigen::Index>(pairs[r].second)) -= others;
        }
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t c = 0; c < d; ++c) {
                const auto cc = static_cast<Eigen::Index>(c);
                jac(k, col_of(a, c, d)) = dphi_dt(static_cast<Eigen::Index>(a)) * w(k, cc) * scale(cc);
            }
        }
    }
    return jac;
}

Matrix exact_jacobian_psi(const FeatureMapSpec& spec, const Matrix& coords) {
    spec.check_shape(coords);
    const Matrix u = spec.rescaled(coords);
    const Vector scale = spec.rescale_factors();
    const std::size_t d = spec.d;
    Matrix jac = Matrix::Zero(static_cast<Eigen::Index>(spec.q), static_cast<Eigen::Index>(spec.n * d));
    for (std::size_t l = 0; l < spec.q; ++l) {
        const MultiIndex& alpha = spec.multi_indices[l];
        for (std::size_t a = 0; a < spec.n; ++a) {
            const auto row = u.row(static_cast<Eigen::Index>(a));
            for (std::size_t c = 0; c < d; ++c) {
                if (alpha[c] == 0) continue;
                double value = static_cast<double>(alpha[c]) * ipow(row(static_cast<Eigen::Index>(c)), alpha[c] - 1);
                for (std::size_t c2 = 0; c2 < d; ++c2) {
                    if (c2 != c) value *= ipow(row(static_cast<Eigen::Index>(c2)), alpha[c2]);
                }
                jac(static_cast<Eigen::Index>(l), col_of(a, c, d)) = value * scale(static_cast<Eigen::Index>(c));
            }
        }
    }
    return jac;
}

Matrix exact_jacobian_eta(const FeatureMapSpec& spec, const Matrix& coords) {
    const ParticleConfiguration x(coords);
    const Vector phi = eval_phi(spec, x);
    const Vector psi = eval_psi(spec, x);
    const Matrix jphi = exact_jacobian_phi(spec, coords);
    const Matrix jpsi = exact_jacobian_psi(spec, coords);
    const auto p = static_cast<Eigen::Index>(spec.p);
    Matrix jac(static_cast<Eigen::Index>(spec.m), jphi.cols());
    jac.topRows(p) = jphi;
    for (Eigen::Index l = 0; l < psi.size(); ++l) {
        jac.middleRows((l + 1) * p, p) = psi(l) * jphi + phi * jpsi.row(l);
    }
    return jac;
}

JacobianResult jacobian(const FeatureMapSpec& spec, const ParticleConfiguration& x, JacobianMethod method,
                        std::optional<double> rank_tolerance) {
    spec.check_shape(x.coords());
    JacobianResult result;
    result.method = method;
    if (method == JacobianMethod::CentralDifference) {
        result.matrix = central_difference_jacobian(
            [&spec](const Matrix& c) { return eval_eta(spec, ParticleConfiguration(c)).values; }, x.coords());
        result.step = central_difference_base_step();
    } else {
        result.matrix = exact_jacobian_eta(spec, x.coords());
    }
    SpectrumInfo info = spectrum(result.matrix, rank_tolerance);
    result.singular_values = std::move(info.singular_values);
    result.numerical_rank = info.numerical_rank;
    result.rank_tolerance = info.rank_tolerance;
    return result;
}

std::vector<std::pair<std::size_t, std::size_t>> colliding_pairs(const Matrix& coords, double tol) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < coords.rows(); ++j) {
            if (coords.row(i) == coords.row(j) || (coords.row(i) - coords.row(j)).norm() <= tol) {
                out.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            }
        }
    }
    return out;
}

bool in_singular_locus(const Matrix& coords, double tol) { return !colliding_pairs(coords, tol).empty(); }

double check_singular_column_pairs(const FeatureMapSpec& spec, const ParticleConfiguration& x) {
    spec.check_shape(x.coords());
    const auto pairs = colliding_pairs(x.coords());
    if (pairs.empty()) throw Error(ErrorCode::NoCollision, "configuration has no colliding particle pair");
    const Matrix jac = exact_jacobian_eta(spec, x.coords());
    double worst = 0.0;
    for (const auto& [i1, i2] : pairs) {
        for (std::size_t j = 0; j < spec.d; ++j) {
            const double r = (jac.col(col_of(i1, j, spec.d)) + jac.col(col_of(i2, j, spec.d))).cwiseAbs().maxCoeff();
            worst = std::max(worst, r);
        }
    }
    return worst;
}

CertificationReport check_full_rank_off_singular(const FeatureMapSpec& spec, std::size_t trials, std::uint64_t seed,
                                                 double min_ratio, double distinct_gap) {
    if (spec.m < spec.n * spec.d) {
        throw Error(ErrorCode::SpecTooSmall, "m < n d: the Jacobian cannot have full column rank");
    }
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
    CertificationReport r;
    r.property = Property::FullColumnRank;
    r.spec_id = spec.id();
    r.seed = seed;
    r.tolerance = 1.0 / min_ratio;
    r.tolerances["min_sigma_ratio"] = min_ratio;
    r.tolerances["distinct_gap"] = distinct_gap;
    const DomainBox box = spec.domain();
    for (std::size_t t = 0; t < trials; ++t) {
        auto rng = trial_rng(seed, kSaltFullRank, t);
        const Matrix x = sample_distinct_in_box(box, spec.n, distinct_gap, rng);
        const SpectrumInfo info = spectrum(exact_jacobian_eta(spec, x));
        const Vector& s = info.singular_values;
        const double ratio = s(0) > 0.0 ? s(s.size() - 1) / s(0) : 0.0;
        r.track_min("min_sigma_ratio", ratio);
        const double condition = ratio > 0.0 ? 1.0 / ratio : std::numeric_limits<double>::max();
        r.record(condition, !(ratio > min_ratio), x, std::nullopt, "Jacobian loses column rank off the collision locus");
    }
    r.trials = trials;
    return r;
}

double check_product_rule_blocks(const FeatureMapSpec& spec, const ParticleConfiguration& x) {
    spec.check_shape(x.coords());
    const Matrix lhs = central_difference_jacobian(
        [&spec](const Matrix& c) { return eval_eta(spec, ParticleConfiguration(c)).values; }, x.coords());
    const Vector phi = eval_phi(spec, x);
    const Vector psi = eval_psi(spec, x);
    const Matrix jphi = exact_jacobian_phi(spec, x.coords());
    const Matrix jpsi = exact_jacobian_psi(spec, x.coords());
    const auto p = static_cast<Eigen::Index>(spec.p);
    double worst = 0.0;
    for (Eigen::Index l = 0; l < psi.size(); ++l) {
        const Matrix residual = lhs.middleRows((l + 1) * p, p) - psi(l) * jphi - phi * jpsi.row(l);
        worst = std::max(worst, residual.cwiseAbs().maxCoeff());
    }
    return worst;
}

}  // namespace antisym
