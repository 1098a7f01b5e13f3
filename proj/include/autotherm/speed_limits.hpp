// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>

#include "autotherm/dynamics.hpp"
#include "autotherm/ledger.hpp"
#include "autotherm/quadrature.hpp"
#include "autotherm/states.hpp"
#include "autotherm/tensor.hpp"

namespace autotherm {

namespace tol {
/// Averaged speeds at or below this make QSL times undefined.
inline constexpr double kLambdaFloor = 1e-12;
/// Audit margins in (-kAuditFlag, 0) are flagged, not failed.
inline constexpr double kAuditFlag = 1e-9;
}  // namespace tol

/// 2/e, the additive constant of the entropy continuity bound.
double fannes_constant();

double schatten_distance(const DensityMatrix& rho1, const DensityMatrix& rho2, SchattenOrder p);

struct AveragedNorm {
  double lambda = 0.0;
  double error_estimate = 0.0;
};

/// (1/tau) int_0^tau ||d/dt rho_label||_p dt. The integrand uses the exact
/// Bohr-frequency expansion of the reduced state. Requires tau > 0.
AveragedNorm time_averaged_norm(const Evolution& evolution, std::string_view label, SchattenOrder p, double tau,
                                const QuadratureConfig& quad = {});
AveragedNorm time_averaged_norm(const Scenario& scenario, std::string_view label, SchattenOrder p, double tau,
                                const QuadratureConfig& quad = {});

/// l_p(rho(tau), rho(0)) / Lambda; empty when Lambda <= kLambdaFloor.
std::optional<double> qsl_time(const Evolution& evolution, std::string_view label, SchattenOrder p, double tau,
                               const QuadratureConfig& quad = {});

/// Everything about one (p, tau) point. Undefined times are empty.
struct QtslReport {
  double p = 1.0;
  double tau = 0.0;
  double dist_s = 0.0;
  double dist_m = 0.0;
  double lambda_s = 0.0;
  double lambda_m = 0.0;
  std::optional<double> t_s;
  std::optional<double> t_m;
  double lambda_star = 0.0;
  std::optional<double> t_star;
  double b_star = 0.0;
  /// T* B*, which stays defined (as sum_x w_x l_x) when T* is not.
  double t_star_b_star = 0.0;
  /// |printed weighted-time form - distance-over-norm form|
  double identity_residual = 0.0;
  double fannes_margin = 0.0;
  double dynamical_landauer_margin = 0.0;
  double hypothesis_margin = 0.0;
  double stein_exponent = 0.0;
  double hypothesis_bound = 0.0;
  double quadrature_error_estimate = 0.0;
  ThermoLedger ledger;
};

/// At tau = 0 the averaged speeds are the instantaneous ones and T* = 0.
QtslReport qtsl_time(const Evolution& evolution, SchattenOrder p, double tau, const QuadratureConfig& quad = {});
QtslReport qtsl_time(const Scenario& scenario, SchattenOrder p, double tau, const QuadratureConfig& quad = {});

/// ln(d) d^{1-1/p} Lambda*_p with d = d_s d_m.
double bekenstein_bound(const Evolution& evolution, SchattenOrder p, double tau, const QuadratureConfig& quad = {});

struct AuditMargin {
  double margin = 0.0;
  /// margin in (-kAuditFlag, 0)
  bool flagged = false;
  /// margin <= -kAuditFlag
  bool violated = false;
};

AuditMargin classify_margin(double margin);

AuditMargin fannes_audit(const Evolution& evolution, SchattenOrder p, double tau, const QuadratureConfig& quad = {});
AuditMargin dynamical_landauer_audit(const Evolution& evolution, SchattenOrder p, double tau,
                                     const QuadratureConfig& quad = {});

struct HypothesisTest {
  /// S(rho_tot(tau) || sigma_tot(tau)); +inf on support mismatch.
  double stein_exponent = 0.0;
  double upper_bound = 0.0;
  double margin = 0.0;
  bool infinite_exponent = false;
};

HypothesisTest hypothesis_testing_bound(const Evolution& evolution, SchattenOrder p, double tau,
                                        const QuadratureConfig& quad = {});

}  // namespace autotherm
