// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace autotherm::cli {

enum ExitCode : int { kOk = 0, kPhysicsFailure = 1, kInputError = 2 };

/// "start:stop:count" (inclusive, evenly spaced) or "a,b,c". Throws
/// ParameterError on empty grids or counts below 1.
std::vector<double> parse_grid(std::string_view text);

/// Runs one subcommand: verify, evolve, qtsl-sweep, bounds, oracle-compare.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace autotherm::cli
