// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file error.hpp
 * @brief Error codes and the exception type thrown by the library.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace antisym {

enum class ErrorCode {
    DimensionMismatch,
    InvalidArgument,
    CollidingInput,
    NoCollision,
    OrbitCheckInfeasible,
    SpecTooSmall,
    DomainViolation,
    IllConditioned,
    NonpositiveEps,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace antisym
