// Copyright 2026 The Antisym Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace antisym::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool with `args` (without the program name). Human-readable or
/// JSON results go to `out`, diagnostics to `err`. Files are written only
/// after every computation succeeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antisym::cli
