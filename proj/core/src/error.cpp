// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#include <antisym/error.hpp>

namespace antisym {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::CollidingInput: return "CollidingInput";
        case ErrorCode::NoCollision: return "NoCollision";
        case ErrorCode::OrbitCheckInfeasible: return "OrbitCheckInfeasible";
        case ErrorCode::SpecTooSmall: return "SpecTooSmall";
        case ErrorCode::DomainViolation: return "DomainViolation";
        case ErrorCode::IllConditioned: return "IllConditioned";
        case ErrorCode::NonpositiveEps: return "NonpositiveEps";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace antisym
