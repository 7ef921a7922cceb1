// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/error.hpp>
#include <antisym/types.hpp>

#include <utility>

namespace antisym {

DomainBox DomainBox::symmetric_unit(std::size_t d) {
    const auto k = static_cast<Eigen::Index>(d);
    return DomainBox{Vector::Constant(k, -1.0), Vector::Constant(k, 1.0)};
}

bool DomainBox::contains(const Matrix& coords) const {
    if (static_cast<std::size_t>(coords.cols()) != dim()) return false;
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
        for (Eigen::Index j = 0; j < coords.cols(); ++j) {
            if (coords(i, j) < lower(j) || coords(i, j) > upper(j)) return false;
        }
    }
    return true;
}

bool DomainBox::is_symmetric_unit() const {
    return (lower.array() == -1.0).all() && (upper.array() == 1.0).all();
}

void DomainBox::validate() const {
    if (lower.size() != upper.size() || lower.size() == 0) {
        throw Error(ErrorCode::InvalidArgument, "domain box bounds must be non-empty and of equal length");
    }
    for (Eigen::Index j = 0; j < lower.size(); ++j) {
        if (!(lower(j) < upper(j))) {
            throw Error(ErrorCode::InvalidArgument, "domain box requires lower < upper in every coordinate");
        }
    }
}

ParticleConfiguration::ParticleConfiguration(Matrix coords) : coords_(std::move(coords)) {
    if (coords_.rows() < 1 || coords_.cols() < 1) {
        throw Error(ErrorCode::InvalidArgument, "configuration needs n >= 1 particles of dimension d >= 1");
    }
}

ParticleConfiguration::ParticleConfiguration(Matrix coords, DomainBox box) : ParticleConfiguration(std::move(coords)) {
    box.validate();
    if (box.dim() != d()) throw Error(ErrorCode::DimensionMismatch, "domain box dimension differs from particle dimension");
    if (!box.contains(coords_)) throw Error(ErrorCode::DomainViolation, "configuration lies outside its domain box");
    box_ = std::move(box);
}

ParticleConfiguration ParticleConfiguration::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != n()) throw Error(ErrorCode::DimensionMismatch, "permutation length differs from particle count");
    Matrix out(coords_.rows(), coords_.cols());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        out.row(static_cast<Eigen::Index>(i)) = coords_.row(static_cast<Eigen::Index>(perm[i]));
    }
    ParticleConfiguration result(std::move(out));
    result.box_ = box_;
    return result;
}

Vector flatten(const Matrix& coords) {
    Vector flat(coords.size());
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
        for (Eigen::Index j = 0; j < coords.cols(); ++j) flat(k++) = coords(i, j);
    }
    return flat;
}

Matrix unflatten(const Vector& flat, std::size_t n, std::size_t d) {
    if (static_cast<std::size_t>(flat.size()) != n * d) {
        throw Error(ErrorCode::DimensionMismatch, "flat vector length is not n * d");
    }
    Matrix coords(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < coords.rows(); ++i) {
        for (Eigen::Index j = 0; j < coords.cols(); ++j) coords(i, j) = flat(k++);
    }
    return coords;
}

}  // namespace antisym
