// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0
//
// Closed-form p = 1 results for the two-qubit families at beta = 1, used as
// ground truth for the numerical pipeline. The built-in scenarios reproduce
// them with system_bath_coupling = 0.

#pragma once

#include <numbers>
#include <optional>

namespace autotherm {

/// exp(1), the Boltzmann factor of a unit gap at beta = 1.
inline constexpr double kEuler = std::numbers::e;

namespace tol {
/// Floor on |T1| in relative T1 comparisons; below it both values are
/// roundoff over a nonzero speed.
inline constexpr double kT1RelativeFloor = 1e-9;
}  // namespace tol

/// |numeric - oracle| / max(|oracle|, kT1RelativeFloor)
double t1_relative_deviation(double numeric, double oracle);

struct EllipticArgs {
  double phi = 0.0;  // amplitude, >= 0
  double m = 0.0;    // parameter k^2, may be negative
};

/// int_0^phi sqrt(1 - m sin^2 x) dx by adaptive quadrature. Throws
/// DomainError when the integrand goes negative (m > 1 and phi beyond
/// asin(1/sqrt m)) or phi < 0.
double ellipe_incomplete(const EllipticArgs& args);

/// int_0^tau |cos 2t| dt, tau >= 0.
double abs_cos_integral(double tau);
/// int_0^tau |sin 2t| dt, tau >= 0.
double abs_sin_integral(double tau);

/// T1 = L / Lambda, where L and Lambda are the combined distance and speed
/// with common factors divided out. t1 is empty when Lambda vanishes.
struct ClosedForms {
  double dist_s = 0.0;
  double dist_m = 0.0;
  double lambda_s = 0.0;
  double lambda_m = 0.0;
  double big_l = 0.0;
  double big_lambda = 0.0;
  std::optional<double> t1;
};

/// Requires tau > 0.
ClosedForms cmaybe_closed_forms(double theta, double tau);
ClosedForms werner_zx_closed_forms(double phi, double tau, double lambda = 1.0);
ClosedForms werner_xx_components(double lambda, double phi, double tau);

struct XxQtsl {
  double big_l = 0.0;
  double big_lambda = 0.0;
  std::optional<double> t1;
};

/// The angle-free X(x)X result.
XxQtsl werner_xx_closed_forms(double tau);

/// |cos 2phi| / (|sin phi + cos phi| sqrt(1 - sin 2phi)); 1 at the
/// removable singularities.
double phi_independence_ratio(double phi);

}  // namespace autotherm
