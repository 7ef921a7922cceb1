// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file serialize.hpp
 * @brief JSON and CSV encodings for the library's value types.
 *
 * CSV floats use 17 significant digits. JSON floats are written in the
 * shortest form that parses back to the same double.
 */

#pragma once

#include <antisym/calculus.hpp>
#include <antisym/features.hpp>
#include <antisym/represent.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antisym {

/// "%.17g".
std::string format_double(double value);

std::string to_json(const ProjectionSet& w, int indent = 2);
ProjectionSet projection_set_from_json(std::string_view text);

std::string to_json(const FeatureMapSpec& spec, int indent = 2);
FeatureMapSpec spec_from_json(std::string_view text);

/// {spec, inputs, features}.
std::string features_to_json(const FeatureMapSpec& spec, std::span<const ParticleConfiguration> inputs,
                             std::span<const FeatureVector> features, int indent = 2);

/// One row per configuration: n d coordinates then m features, with header.
void write_features_csv(std::ostream& os, const FeatureMapSpec& spec, std::span<const ParticleConfiguration> inputs,
                        std::span<const FeatureVector> features);

/// Reads configurations from CSV rows of n d coordinates (particle-major).
/// Blank lines and lines starting with '#' are skipped; a header row whose
/// first field is not numeric is skipped. Extra columns are rejected.
std::vector<ParticleConfiguration> read_configurations_csv(std::istream& is, std::size_t n, std::size_t d);

std::string to_json(const JacobianResult& result, int indent = 2);
void write_jacobian_csv(std::ostream& os, const JacobianResult& result);

std::string to_json(const OddModel& model, int indent = 2);
OddModel model_from_json(std::string_view text);

/// Columns eps,value,closed_form,rel_error.
void write_curve_csv(std::ostream& os, std::span<const CurvePoint> curve);

}  // namespace antisym
