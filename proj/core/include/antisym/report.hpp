// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file report.hpp
 * @brief Certification reports produced by the randomized property checks.
 */

#pragma once

#include <antisym/types.hpp>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace antisym {

enum class Property {
    AntiSymmetry,
    SymmetryPsi,
    ZeroIffCollision,
    OrbitSeparation,
    PsiSeparation,
    OddWellDefined,
    FullColumnRank,
};

std::string_view to_string(Property property) noexcept;
Property property_from_string(std::string_view name);

/// A failing input. x_prime is set for two-configuration checks.
struct Witness {
    Matrix x;
    std::optional<Matrix> x_prime;
    double violation = 0.0;
    std::string note;

    friend bool operator==(const Witness& a, const Witness& b);
};

struct CertificationReport {
    static constexpr std::size_t kWitnessCap = 10;

    Property property = Property::AntiSymmetry;
    std::string spec_id;
    std::size_t trials = 0;
    std::size_t failures = 0;
    /// Largest observed value of the property's violation measure; a trial
    /// passes when its violation is at most `tolerance`.
    double worst_violation = 0.0;
    double tolerance = 0.0;
    std::vector<Witness> witnesses;
    std::uint64_t seed = 0;
    std::map<std::string, double> tolerances;
    /// Auxiliary observations (e.g. smallest separation gap seen).
    std::map<std::string, double> metrics;

    [[nodiscard]] bool passed() const noexcept { return failures == 0; }

    /// Records one trial outcome; keeps at most kWitnessCap witnesses.
    void record(double violation, bool failed, const Matrix& x, const std::optional<Matrix>& x_prime = std::nullopt,
                std::string note = {});

    /// Keeps the smaller of the stored and given value under `key`.
    void track_min(const std::string& key, double value);
    void track_max(const std::string& key, double value);

    friend bool operator==(const CertificationReport& a, const CertificationReport& b);
};

std::string to_json(const CertificationReport& report, int indent = 2);
CertificationReport report_from_json(std::string_view text);

}  // namespace antisym
