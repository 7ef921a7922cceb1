// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

// Internal helpers shared by the JSON encoders; not installed.

#pragma once

#include <antisym/error.hpp>
#include <antisym/types.hpp>

#include <json.hpp>

#include <string>
#include <string_view>

namespace antisym::detail {

using Json = nlohmann::ordered_json;

inline Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected a matrix as an array of rows");
    if (j.empty()) return Matrix(0, 0);
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j.at(0).size());
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Json& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw Error(ErrorCode::ParseError, "ragged matrix rows");
        }
        for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = row.at(static_cast<std::size_t>(c)).get<double>();
    }
    return m;
}

inline Json vector_to_json(const Vector& v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
    return out;
}

inline Vector vector_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of numbers");
    Vector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j.at(i).get<double>();
    return v;
}

inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace antisym::detail
