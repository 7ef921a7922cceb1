// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

// Experiment configuration for the antisym command-line tool. A run is
// described by one JSON file whose fields may be overridden by flags.

#pragma once

#include <antisym/calculus.hpp>
#include <antisym/features.hpp>
#include <antisym/represent.hpp>
#include <antisym/verify.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace antisym::cli {

struct RunConfig {
    std::size_t n = 2;
    std::size_t d = 1;
    std::optional<DomainBox> domain_box;
    ProjectionMode projection_mode = ProjectionMode::Paper;
    std::uint64_t seed = 0;
    Tolerances tolerances;
    /// Directory for output artifacts; empty means print to stdout only.
    std::string output_dir;

    // verify
    std::size_t trials = 1000;
    Mutation mutation = Mutation::None;

    // jacobian and demo jacobian
    /// Flattened configurations (particle-major), checked against n*d by validate().
    std::vector<Vector> points;
    JacobianMethod jacobian_method = JacobianMethod::ExactPolynomial;

    // demo lipschitz / c1
    std::vector<double> eps_list{1e-1, 1e-2, 1e-3, 1e-4};

    // fit
    TargetKind target = TargetKind::Slater;
    FitConfig fit;
};

/// Overwrites the fields present in `text`. Unknown keys are rejected.
/// Throws Error(ParseError) on malformed input.
void apply_config_json(RunConfig& config, std::string_view text);

/// Throws Error(ParseError) when a field is out of range.
void validate(const RunConfig& config);

FeatureMapSpec build_spec(const RunConfig& config);

/// "a,b,c" with n*d numbers in particle-major order.
Matrix parse_point(std::string_view text, std::size_t n, std::size_t d);

/// "lo:hi" for one coordinate.
std::pair<double, double> parse_interval(std::string_view text);

}  // namespace antisym::cli
