// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "autotherm/states.hpp"
#include "autotherm/tensor.hpp"

namespace autotherm {

namespace tol {
/// Allowed deviation of the bath marginal from its Gibbs state.
inline constexpr double kMarginal = 1e-9;
inline constexpr double kIdealMemory = 1e-12;
}  // namespace tol

enum class Pauli { kI, kX, kY, kZ };

Matrix pauli_matrix(Pauli p);
char pauli_letter(Pauli p);

/// coefficient * (tensor product of Paulis); unnamed factors are identity.
struct PauliTerm {
  double coefficient = 1.0;
  std::map<std::string, Pauli> factors;

  bool operator==(const PauliTerm&) const = default;
};

/// coefficient * block, where block acts on `labels` in the listed order.
struct DenseTerm {
  double coefficient = 1.0;
  LabelSet labels;
  Matrix block;

  bool operator==(const DenseTerm& other) const {
    return coefficient == other.coefficient && labels == other.labels && block.rows() == other.block.rows() &&
           block.cols() == other.block.cols() && block == other.block;
  }
};

using HamiltonianTerm = std::variant<PauliTerm, DenseTerm>;

/// Labels touched by a term, in the term's own order.
LabelSet term_labels(const HamiltonianTerm& term);
CompositeOperator realize(const HamiltonianTerm& term, const SubsystemLayout& layout);

/// A complete experiment. The layout is (bath, system, memory, work) in this
/// order; the initial total state is initial_wbar (x) initial_work.
struct Scenario {
  std::string name;
  SubsystemLayout layout;
  double beta = 1.0;
  std::vector<HamiltonianTerm> bare_terms;
  std::vector<HamiltonianTerm> interaction_terms;
  DensityMatrix initial_wbar;
  DensityMatrix initial_work;
};

/// The complement of the work factor, in layout order.
LabelSet wbar_labels(const SubsystemLayout& layout);

struct ScenarioDiagnostics {
  double bath_marginal_deviation = 0.0;
  double memory_identity_deviation = 0.0;
  std::vector<std::string> warnings;
};

/// Throws ScenarioError on hard violations; soft findings become warnings.
ScenarioDiagnostics validate_scenario(const Scenario& scenario);

struct BuiltHamiltonians {
  CompositeOperator h_bare;
  CompositeOperator h_total;
  /// "bare:<label>" for each subsystem and "int:<l1>,<l2>,..." per
  /// interaction support, each embedded in the full layout.
  std::map<std::string, CompositeOperator> parts;
  /// Bare Hamiltonian of each subsystem on its own factor.
  std::map<std::string, CompositeOperator> local_bare;
};

BuiltHamiltonians build(const Scenario& scenario);

/// ||[H_tot, H_0]||_inf
double check_energy_conservation(const BuiltHamiltonians& built);

struct IdealMemoryCheck {
  bool ideal = true;
  double deviation = 0.0;
};

/// ||H_m - c 1||_inf with c = tr H_m / d_m.
IdealMemoryCheck check_ideal_memory(const BuiltHamiltonians& built);

enum class BuiltinFamily { kCMaybe, kWernerZX, kWernerXX, kSwapCounterexample };

struct BuiltinParams {
  double theta = 0.0;
  double lambda = 1.0;
  double phi = 0.0;
  /// Coefficient of the Z_b Z_s coupling. The printed two-qubit closed forms
  /// describe the model with this set to 0.
  double system_bath_coupling = 1.0;
};

Scenario builtin_scenario(BuiltinFamily family, const BuiltinParams& params = {});

struct BuiltinSpec {
  BuiltinFamily family = BuiltinFamily::kCMaybe;
  BuiltinParams params;
};

/// "cmaybe:theta=1.0", "werner_zx:lambda=0.5,phi=0.6,sb=0", "swap".
BuiltinSpec parse_builtin_spec(std::string_view spec);
/// Keys: theta, lambda, phi, sb.
void set_builtin_param(BuiltinParams& params, std::string_view key, double value);
Scenario builtin_scenario(std::string_view spec);
BuiltinFamily parse_builtin_family(std::string_view name);
std::string_view builtin_family_name(BuiltinFamily family);

}  // namespace autotherm
