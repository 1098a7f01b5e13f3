// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "autotherm/dynamics.hpp"
#include "autotherm/hamiltonian.hpp"
#include "autotherm/states.hpp"
#include "autotherm/tensor.hpp"

namespace autotherm {

namespace tol {
inline constexpr double kCatalysis = 1e-9;
/// Inputs to check_pt_unitarity must be unitary to this residual.
inline constexpr double kUnitaryInput = 1e-9;
}  // namespace tol

/// ||(U^{T_wbar})^dagger U^{T_wbar} - 1||_inf. Throws ContractError when U is
/// not unitary.
double check_pt_unitarity(const CompositeOperator& u);

/// ||[H_tot, 1_wbar (x) rho_w]||_inf
double check_state_compatibility(const CompositeOperator& h_total, const DensityMatrix& rho_w);

struct SchmidtStructure {
  /// max over pairs ||[A_i, A_j]||_inf
  double schmidt_commutator_residual = 0.0;
  /// max over j ||[B_j, rho_w]||_inf
  double work_factor_residual = 0.0;
  std::size_t terms = 0;
};

/// Splits H_tot = sum_j A_j (x) B_j across wbar | work, with each B_j scaled
/// to unit spectral norm.
SchmidtStructure check_schmidt_structure(const CompositeOperator& h_total, const DensityMatrix& rho_w);

/// Entry n - 2 holds ||(H^n)^{T_wbar} - (H^{T_wbar})^n||_inf; n_max >= 2.
std::vector<double> check_power_multiplicativity(const CompositeOperator& h_total, int n_max);

/// ||E_wbar(1/D) - 1/D||_1
double check_unitality(const Evolution& evolution, double tau);
double check_unitality(const Scenario& scenario, double tau);

/// |S(E_w(rho_w)) - S(rho_w)|
double check_work_entropy(const Evolution& evolution, double tau);
double check_work_entropy(const Scenario& scenario, double tau);

enum class CheckKind { kStructural, kDynamical };

struct CheckRecord {
  std::string name;
  double residual = 0.0;
  double threshold = tol::kCatalysis;
  bool pass = true;
  CheckKind kind = CheckKind::kStructural;
};

struct CatalysisReport {
  std::string scenario;
  double tau = 0.0;
  double pt_unitarity_residual = 0.0;
  double state_compatibility_residual = 0.0;
  double schmidt_commutator_residual = 0.0;
  double work_factor_residual = 0.0;
  std::vector<double> power_residuals;  // n = 2..n_max
  double unitality_residual = 0.0;
  double work_entropy_drift = 0.0;
  std::vector<CheckRecord> checks;

  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] std::vector<std::string> failed_checks() const;
  [[nodiscard]] std::string to_json() const;
  void write_text(std::ostream& os) const;
};

CatalysisReport verify(const Evolution& evolution, double tau, int n_max = 4, double threshold = tol::kCatalysis);
CatalysisReport verify(const Scenario& scenario, double tau, int n_max = 4, double threshold = tol::kCatalysis);

}  // namespace autotherm
