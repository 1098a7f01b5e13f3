// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include "autotherm/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "autotherm/errors.hpp"
#include "autotherm/quadrature.hpp"

namespace autotherm {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE2 = kEuler * kEuler;
constexpr double kE4 = kE2 * kE2;

void require_positive_tau(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ParameterError("closed forms need tau > 0");
}

double parity_sign(double n) { return std::fmod(n, 2.0) == 0.0 ? 1.0 : -1.0; }

/// 2 int_0^tau |cos 2t| dt
double cos_lobes(double tau) { return 2.0 * abs_cos_integral(tau); }

}  // namespace

double ellipe_incomplete(const EllipticArgs& args) {
  const double phi = args.phi;
  const double m = args.m;
  if (!(phi >= 0.0) || !std::isfinite(phi) || !std::isfinite(m)) throw DomainError("ellipe_incomplete: need phi >= 0");
  if (phi == 0.0) return 0.0;
  if (m > 1.0 && phi > std::asin(1.0 / std::sqrt(m))) {
    throw DomainError("ellipe_incomplete: 1 - m sin^2 x < 0 inside [0, phi]");
  }
  const auto f = [m](double x) {
    const double s = std::sin(x);
    return std::sqrt(std::max(0.0, 1.0 - m * s * s));
  };
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-14;
  cfg.initial_panels = 2;
  // panel edges on multiples of pi/2 keep the m = 1 kinks at endpoints
  double total = 0.0;
  for (double a = 0.0; a < phi; a += kPi / 2.0) {
    total += integrate(f, a, std::min(phi, a + kPi / 2.0), cfg).value;
  }
  return total;
}

double abs_cos_integral(double tau) {
  if (!(tau >= 0.0)) throw ParameterError("abs_cos_integral: tau < 0");
  const double n = std::floor(2.0 * tau / kPi + 0.5);
  return n + 0.5 * parity_sign(n) * std::sin(2.0 * tau);
}

double abs_sin_integral(double tau) {
  if (!(tau >= 0.0)) throw ParameterError("abs_sin_integral: tau < 0");
  const double n = std::floor(2.0 * tau / kPi);
  return n + 0.5 * (1.0 - parity_sign(n) * std::cos(2.0 * tau));
}

ClosedForms cmaybe_closed_forms(double theta, double tau) {
  require_positive_tau(tau);
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double sin2tau = std::abs(std::sin(2.0 * tau));
  const double radicand = 2.0 * (1.0 - kE4) * c + 0.5 * (1.0 + kE4) * (3.0 + std::cos(2.0 * theta)) +
                          2.0 * kE2 * s * s * std::cos(4.0 * tau);
  const double root = std::sqrt(std::max(0.0, radicand)) / (1.0 + kE2);
  const double amplitude = 1.0 + kE2 + (1.0 - kE2) * c;
  const double k = 2.0 * kEuler * s / amplitude;
  const double memory_integral = amplitude / (2.0 * (1.0 + kE2)) * ellipe_incomplete({4.0 * tau, k * k});

  ClosedForms out;
  out.dist_s = std::abs(s * c) * sin2tau;
  out.dist_m = std::abs(c) * sin2tau * root;
  out.lambda_s = std::abs(s * c) * cos_lobes(tau) / tau;
  out.lambda_m = std::abs(c) * memory_integral / tau;
  out.big_l = sin2tau * (std::abs(s) + root);
  out.big_lambda = (cos_lobes(tau) * std::abs(s) + memory_integral) / tau;
  if (out.big_lambda > 0.0) out.t1 = out.big_l / out.big_lambda;
  return out;
}

ClosedForms werner_zx_closed_forms(double phi, double tau, double lambda) {
  require_positive_tau(tau);
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  const double sin2phi = std::abs(std::sin(2.0 * phi));
  const double sin2tau = std::abs(std::sin(2.0 * tau));
  const double c2 = c * c;
  const double s2 = s * s;
  const double radicand = c2 * c2 + kE4 * s2 * s2 + 0.5 * kE2 * sin2phi * sin2phi * std::cos(4.0 * tau);
  const double root = 2.0 / (1.0 + kE2) * std::sqrt(std::max(0.0, radicand));
  const double amplitude = c2 + kE2 * s2;
  const double k = kEuler * std::sin(2.0 * phi) / amplitude;
  const double memory_integral = amplitude / (1.0 + kE2) * ellipe_incomplete({4.0 * tau, k * k});

  ClosedForms out;
  out.dist_s = lambda * sin2phi * sin2tau;
  out.dist_m = lambda * sin2tau * root;
  out.lambda_s = lambda * cos_lobes(tau) * sin2phi / tau;
  out.lambda_m = lambda * memory_integral / tau;
  out.big_l = sin2tau * (sin2phi + root);
  out.big_lambda = (cos_lobes(tau) * sin2phi + memory_integral) / tau;
  if (out.big_lambda > 0.0) out.t1 = out.big_l / out.big_lambda;
  return out;
}

namespace {

double xx_memory_integral(double tau) {
  const double k2 = -std::pow(2.0 * kEuler / (kE2 - 1.0), 2);
  return (kE2 - 1.0) / (2.0 * (kE2 + 1.0)) * ellipe_incomplete({4.0 * tau, k2});
}

double xx_root(double tau) { return std::sqrt(1.0 + kE4 - 2.0 * kE2 * std::cos(4.0 * tau)) / (kE2 + 1.0); }

}  // namespace

ClosedForms werner_xx_components(double lambda, double phi, double tau) {
  require_positive_tau(tau);
  const double cos2phi = std::abs(std::cos(2.0 * phi));
  const double prefactor = std::abs(std::sin(phi) + std::cos(phi)) * std::sqrt(std::max(0.0, 1.0 - std::sin(2.0 * phi)));
  const double sin_tau = std::sin(tau);
  const double sin_lobes = 2.0 * abs_sin_integral(tau);

  ClosedForms out;
  out.dist_s = 2.0 * lambda * cos2phi * sin_tau * sin_tau;
  out.dist_m = lambda * cos2phi * std::abs(std::sin(2.0 * tau)) * xx_root(tau);
  out.lambda_s = lambda * prefactor * sin_lobes / tau;
  out.lambda_m = lambda * prefactor * xx_memory_integral(tau) / tau;
  const XxQtsl reduced = werner_xx_closed_forms(tau);
  out.big_l = reduced.big_l;
  out.big_lambda = reduced.big_lambda;
  out.t1 = reduced.t1;
  return out;
}

XxQtsl werner_xx_closed_forms(double tau) {
  require_positive_tau(tau);
  const double sin_tau = std::sin(tau);
  XxQtsl out;
  out.big_l = 2.0 * sin_tau * sin_tau + std::abs(std::sin(2.0 * tau)) * xx_root(tau);
  out.big_lambda = (2.0 * abs_sin_integral(tau) + xx_memory_integral(tau)) / tau;
  if (out.big_lambda > 0.0) out.t1 = out.big_l / out.big_lambda;
  return out;
}

double t1_relative_deviation(double numeric, double oracle) {
  return std::abs(numeric - oracle) / std::max(std::abs(oracle), tol::kT1RelativeFloor);
}

double phi_independence_ratio(double phi) {
  const double denominator =
      std::abs(std::sin(phi) + std::cos(phi)) * std::sqrt(std::max(0.0, 1.0 - std::sin(2.0 * phi)));
  if (denominator < 1e-300) return 1.0;
  return std::abs(std::cos(2.0 * phi)) / denominator;
}

}  // namespace autotherm
