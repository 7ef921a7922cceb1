// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/error.hpp>
#include <antisym/features.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <string>

namespace antisym {

namespace {

void append_with_degree(std::size_t d, std::size_t degree, MultiIndex& prefix, std::vector<MultiIndex>& out) {
    if (prefix.size() + 1 == d) {
        prefix.push_back(static_cast<std::uint32_t>(degree));
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::size_t first = 0; first <= degree; ++first) {
        prefix.push_back(static_cast<std::uint32_t>(first));
        append_with_degree(d, degree - first, prefix, out);
        prefix.pop_back();
    }
}

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::vector<MultiIndex> power_sum_indices(std::size_t d, std::size_t max_degree) {
    if (d < 1) throw Error(ErrorCode::InvalidArgument, "multi-indices need d >= 1");
    std::vector<MultiIndex> out;
    MultiIndex prefix;
    for (std::size_t degree = 1; degree <= max_degree; ++degree) append_with_degree(d, degree, prefix, out);
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

double ipow(double x, std::uint32_t k) noexcept {
    double result = 1.0;
    for (std::uint32_t i = 0; i < k; ++i) result *= x;
    return result;
}

FeatureMapSpec FeatureMapSpec::build(std::size_t n, std::size_t d, ProjectionMode mode, std::optional<DomainBox> box) {
    if (n < 1 || d < 1) throw Error(ErrorCode::InvalidArgument, "feature map needs n >= 1 and d >= 1");
    if (box) {
        box->validate();
        if (box->dim() != d) throw Error(ErrorCode::DimensionMismatch, "domain box dimension differs from d");
    }
    FeatureMapSpec spec;
    spec.n = n;
    spec.d = d;
    spec.projections = build_projection_set(n, d, mode);
    spec.p = spec.projections.p();
    spec.multi_indices = power_sum_indices(d, n);
    spec.q = spec.multi_indices.size();
    spec.m = spec.p * (spec.q + 1);
    spec.box = std::move(box);
    return spec;
}

std::string FeatureMapSpec::id() const {
    std::string out = "n=" + std::to_string(n) + ",d=" + std::to_string(d) + ",mode=" +
                      std::string(to_string(projections.mode)) + ",box=";
    if (!box) return out + "none";
    out += "[";
    for (Eigen::Index j = 0; j < box->lower.size(); ++j) {
        if (j > 0) out += ";";
        out += fmt17(box->lower(j)) + ":" + fmt17(box->upper(j));
    }
    return out + "]";
}

DomainBox FeatureMapSpec::domain() const { return box ? *box : DomainBox::symmetric_unit(d); }

Vector FeatureMapSpec::rescale_factors() const {
    Vector factors = Vector::Ones(static_cast<Eigen::Index>(d));
    if (box) factors = 2.0 / (box->upper - box->lower).array();
    return factors;
}

Matrix FeatureMapSpec::rescaled(const Matrix& coords) const {
    if (!box || box->is_symmetric_unit()) return coords;
    Matrix u(coords.rows(), coords.cols());
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
        for (Eigen::Index j = 0; j < coords.cols(); ++j) {
            u(i, j) = (2.0 * coords(i, j) - (box->lower(j) + box->upper(j))) / (box->upper(j) - box->lower(j));
        }
    }
    return u;
}

void FeatureMapSpec::check_shape(const Matrix& coords) const {
    if (static_cast<std::size_t>(coords.rows()) != n || static_cast<std::size_t>(coords.cols()) != d) {
        throw Error(ErrorCode::DimensionMismatch, "configuration is " + std::to_string(coords.rows()) + "x" +
                                                      std::to_string(coords.cols()) + ", spec expects " +
                                                      std::to_string(n) + "x" + std::to_string(d));
    }
}

Matrix projected_scalars(const FeatureMapSpec& spec, const Matrix& coords) {
    spec.check_shape(coords);
    const Matrix u = spec.rescaled(coords);
    const Matrix& w = spec.projections.vectors;
    Matrix t(u.rows(), w.rows());
    // Explicit loop: each entry is summed in the same order whatever the row order.
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        for (Eigen::Index k = 0; k < w.rows(); ++k) {
            double acc = 0.0;
            for (Eigen::Index j = 0; j < u.cols(); ++j) acc += w(k, j) * u(i, j);
            t(i, k) = acc;
        }
    }
    return t;
}

Vector eval_phi(const FeatureMapSpec& spec, const ParticleConfiguration& x) {
    const Matrix t = projected_scalars(spec, x.coords());
    const Eigen::Index n = t.rows();
    Vector phi(t.cols());
    std::vector<double> sorted(static_cast<std::size_t>(n));
    for (Eigen::Index k = 0; k < t.cols(); ++k) {
        // The product is taken over the values sorted in descending order, with the sign
        // of the sorting permutation applied afterwards. Reordering the particles then
        // reproduces the same floating-point product, so even permutations give
        // bitwise-identical features and odd ones flip only the sign bit.
        bool negative = false;
        for (Eigen::Index i = 0; i < n; ++i) {
            sorted[static_cast<std::size_t>(i)] = t(i, k);
            for (Eigen::Index j = i + 1; j < n; ++j) negative ^= t(i, k) < t(j, k);
        }
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        double prod = 1.0;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            for (std::size_t j = i + 1; j < sorted.size(); ++j) prod *= sorted[i] - sorted[j];
        }
        phi(k) = prod == 0.0 ? 0.0 : (negative ? -prod : prod);
    }
    return phi;
}

Vector eval_psi(const FeatureMapSpec& spec, const ParticleConfiguration& x) {
    spec.check_shape(x.coords());
    const Matrix u = spec.rescaled(x.coords());
    Vector psi(static_cast<Eigen::Index>(spec.q));
    std::vector<double> terms(spec.n);
    for (std::size_t l = 0; l < spec.q; ++l) {
        const MultiIndex& alpha = spec.multi_indices[l];
        for (Eigen::Index i = 0; i < u.rows(); ++i) {
            double term = 1.0;
            for (Eigen::Index j = 0; j < u.cols(); ++j) term *= ipow(u(i, j), alpha[static_cast<std::size_t>(j)]);
            terms[static_cast<std::size_t>(i)] = term;
        }
        // Summing in sorted order makes the result independent of the particle order.
        std::sort(terms.begin(), terms.end());
        double sum = 0.0;
        for (double term : terms) sum += term;
        psi(static_cast<Eigen::Index>(l)) = sum;
    }
    return psi;
}

Vector assemble_eta(const Vector& phi, const Vector& psi) {
    const Eigen::Index p = phi.size();
    Vector eta(p * (psi.size() + 1));
    eta.head(p) = phi;
    for (Eigen::Index l = 0; l < psi.size(); ++l) {
        for (Eigen::Index k = 0; k < p; ++k) eta((l + 1) * p + k) = psi(l) * phi(k);
    }
    return eta;
}

FeatureVector eval_eta(const FeatureMapSpec& spec, const ParticleConfiguration& x) {
    return FeatureVector{assemble_eta(eval_phi(spec, x), eval_psi(spec, x)), spec.id()};
}

std::vector<FeatureVector> eval_eta_batch(const FeatureMapSpec& spec, std::span<const ParticleConfiguration> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].n() != spec.n || xs[i].d() != spec.d) {
            throw Error(ErrorCode::DimensionMismatch, "batch element " + std::to_string(i) + " has shape " +
                                                          std::to_string(xs[i].n()) + "x" + std::to_string(xs[i].d()));
        }
    }
    std::vector<FeatureVector> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(eval_eta(spec, x));
    return out;
}

}  // namespace antisym
