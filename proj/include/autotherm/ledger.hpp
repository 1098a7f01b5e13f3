// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0
//
// Energy and entropy bookkeeping of an evolved scenario. Sign conventions:
// Q > 0 when the bath releases energy, W > 0 when the work source does.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "autotherm/dynamics.hpp"

namespace autotherm {

namespace tol {
inline constexpr double kLedger = 1e-8;
/// [H_tot, H_0] residual above which energy is not conserved.
inline constexpr double kEnergyConservation = 1e-12;
}  // namespace tol

struct EntropyChanges {
  double system = 0.0;
  double memory = 0.0;
  double work = 0.0;
};

struct FirstLaw {
  double residual = 0.0;               // |dE - Q - W|
  double conservation_residual = 0.0;  // ||[H_tot, H_0]||_inf
  /// Set when energy is not conserved, so a nonzero residual is physical.
  bool flagged = false;
};

struct SecondLaw {
  double decomposed = 0.0;  // dS_s + dS_m - beta Q
  std::optional<double> delta_rel;
  std::optional<double> residual;
  double kernel_mass_initial = 0.0;
  double kernel_mass_final = 0.0;
  /// Names the relative entropy that left its support, if any.
  std::string support_failure;
};

struct LandauerQuantities {
  double q_eff = 0.0;
  std::optional<double> gap;
  double bound_margin = 0.0;
};

struct ThermoLedger {
  double tau = 0.0;
  double heat = 0.0;
  double work = 0.0;
  double internal_energy_change = 0.0;
  EntropyChanges entropy;
  /// Direct relative-entropy difference when both terms are finite, else
  /// the decomposed value (and delta_rel_direct is false).
  double delta_rel = 0.0;
  bool delta_rel_direct = true;
  double q_eff = 0.0;
  std::optional<double> landauer_gap;
  double bound_margin = 0.0;
  double mi0 = 0.0;
  double relative_entropy_initial = 0.0;
  double relative_entropy_final = 0.0;
  double first_law_residual = 0.0;
  std::optional<double> second_law_residual;
  double memory_energy_residual = 0.0;
  double energy_conservation_residual = 0.0;
  bool energy_flag = false;
  std::string support_failure;
};

double heat(const Evolution& evolution, double tau);
double work(const Evolution& evolution, double tau);
double internal_energy_change(const Evolution& evolution, double tau);
/// tr{(rho_m - E_m(rho_m)) H_m}; vanishes for an ideal memory.
double memory_energy_change(const Evolution& evolution, double tau);
FirstLaw first_law_residual(const Evolution& evolution, double tau);
EntropyChanges entropy_changes(const Evolution& evolution, double tau);
SecondLaw second_law(const Evolution& evolution, double tau);
LandauerQuantities landauer_quantities(const Evolution& evolution, double tau);
/// S(rho_b) + S(rho_s) + S(rho_m) - S(rho_wbar) of the initial state.
double initial_mutual_information(const Evolution& evolution);

ThermoLedger compute_ledger(const Evolution& evolution, double tau);

std::vector<std::string> ledger_csv_columns();
void write_ledger_row(std::ostream& os, const ThermoLedger& ledger);

}  // namespace autotherm
