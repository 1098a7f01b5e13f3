// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0
//
// Text format for scenarios; the grammar is documented in
// docs/scenario_format.md.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "autotherm/hamiltonian.hpp"

namespace autotherm {

/// Throws ScenarioError with a line number on any syntax error, unknown key
/// or invalid physics (validate_scenario is applied).
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::filesystem::path& path);

/// Inverse of parse_scenario. Numbers are written with 17 significant digits
/// and initial states as explicit matrices, so parse(write(s)) reproduces s
/// bit for bit.
std::string write_scenario(const Scenario& scenario);

/// "builtin:<spec>" resolves through builtin_scenario, anything else is a
/// file path.
Scenario resolve_scenario(std::string_view reference);

/// Bitwise equality of every field.
bool identical(const Scenario& a, const Scenario& b);

}  // namespace autotherm
