// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "autotherm/hamiltonian.hpp"

namespace autotherm {

/// A reduced state written exactly as a finite sum over Bohr frequencies,
///   rho_x(t) = sum_k C_k exp(-i w_k t).
/// Evaluating it costs one complex exponential per distinct frequency.
class BohrSeries {
 public:
  BohrSeries(std::vector<double> frequencies, std::vector<Matrix> coefficients);

  [[nodiscard]] Matrix value(double t) const;
  [[nodiscard]] Matrix derivative(double t) const;
  [[nodiscard]] std::size_t size() const noexcept { return frequencies_.size(); }
  [[nodiscard]] const std::vector<double>& frequencies() const noexcept { return frequencies_; }

 private:
  std::vector<double> frequencies_;
  std::vector<Matrix> coefficients_;
};

/// Exact unitary evolution of a scenario. H_tot is diagonalized once at
/// construction; every query is a pure function of t and safe to call
/// concurrently.
class Evolution {
 public:
  explicit Evolution(Scenario scenario);

  [[nodiscard]] const Scenario& scenario() const noexcept { return scenario_; }
  [[nodiscard]] const BuiltHamiltonians& hamiltonians() const noexcept { return built_; }
  [[nodiscard]] const ScenarioDiagnostics& diagnostics() const noexcept { return diagnostics_; }
  [[nodiscard]] const DensityMatrix& initial_state() const noexcept { return rho0_; }
  [[nodiscard]] const DensityMatrix& bath_equilibrium() const noexcept { return bath_eq_; }
  [[nodiscard]] DensityMatrix initial_marginal(std::string_view label) const;
  [[nodiscard]] DensityMatrix initial_marginal(const LabelSet& keep) const;

  [[nodiscard]] CompositeOperator unitary(double t) const { return propagator_.at(t); }
  [[nodiscard]] DensityMatrix total_state(double t) const;
  [[nodiscard]] DensityMatrix reduced_state(double t, std::string_view label) const;
  [[nodiscard]] DensityMatrix reduced_state(double t, const LabelSet& keep) const;

  /// -i [H_tot, rho_tot(t)]
  [[nodiscard]] CompositeOperator state_derivative(double t) const;
  /// Partial trace of the total derivative onto one subsystem.
  [[nodiscard]] CompositeOperator state_derivative(double t, std::string_view label) const;

  /// rho_b^eq (x) E_s(rho_s) (x) E_m(rho_m) (x) E_w(rho_w)
  [[nodiscard]] DensityMatrix weak_coupling_reference(double t) const;

  /// tr_w{ U(t) (input (x) rho_w) U(t)^dagger } for a state on the w-bar block.
  [[nodiscard]] DensityMatrix wbar_channel(const DensityMatrix& input, double t) const;

  [[nodiscard]] BohrSeries reduced_series(std::string_view label) const;

 private:
  [[nodiscard]] Matrix rotated_state(double t) const;

  Scenario scenario_;
  ScenarioDiagnostics diagnostics_;
  BuiltHamiltonians built_;
  Propagator propagator_;
  DensityMatrix rho0_;
  DensityMatrix bath_eq_;
  Matrix rho0_eigen_;  // V^dagger rho0 V
};

DensityMatrix total_state(const Scenario& scenario, double t);
DensityMatrix reduced_state(const Scenario& scenario, double t, std::string_view label);
CompositeOperator state_derivative(const Scenario& scenario, double t, std::string_view label);
DensityMatrix weak_coupling_reference(const Scenario& scenario, double t);

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityMatrix> total_states;
  std::map<std::string, std::vector<DensityMatrix>> reduced;
};

/// `times` must be ascending.
Trajectory sample_trajectory(const Evolution& evolution, std::span<const double> times, const LabelSet& labels);

/// Columns: time, then <label>_re_<i>_<j>, <label>_im_<i>_<j> for each
/// requested reduced state, labels sorted alphabetically, row-major entries.
void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory);

}  // namespace autotherm
