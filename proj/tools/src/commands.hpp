// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

// Subcommand bodies. Each returns its console text and the files it wants
// written; nothing touches the filesystem here except reading inputs.

#pragma once

#include <antisym_cli/run_config.hpp>

#include <string>
#include <vector>

namespace antisym::cli {

struct Artifact {
    std::string name;
    std::string content;
};

struct Outcome {
    int exit_code = 0;
    std::string console;
    std::vector<Artifact> artifacts;
};

struct BasisArgs {
    std::string eval_path;
};

struct PredictArgs {
    std::string model_path;
    std::string input_path;
};

Outcome cmd_basis(const RunConfig& config, const BasisArgs& args, bool json);
Outcome cmd_verify(const RunConfig& config, bool json);
Outcome cmd_jacobian(const RunConfig& config, bool json);
Outcome cmd_fit(const RunConfig& config, bool json);
Outcome cmd_predict(const RunConfig& config, const PredictArgs& args, bool json);
Outcome cmd_demo(const RunConfig& config, const std::string& which, bool json);

/// Reads a whole file; throws Error(IoError).
std::string read_file(const std::string& path);

}  // namespace antisym::cli
