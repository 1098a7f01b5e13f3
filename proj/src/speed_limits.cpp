// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include "autotherm/speed_limits.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "autotherm/errors.hpp"

namespace autotherm {
namespace {

/// d^{1-1/p} ln d
double dimension_weight(double d, SchattenOrder p) {
  const double exponent = p.is_infinite() ? 1.0 : 1.0 - 1.0 / p.value();
  return std::pow(d, exponent) * std::log(d);
}

double distance_travelled(const Evolution& ev, std::string_view label, SchattenOrder p, double tau) {
  return schatten_distance(ev.reduced_state(tau, label), ev.initial_marginal(label), p);
}

/// Samples per period of the fastest Bohr frequency when locating kinks.
constexpr double kKinkSamplesPerPeriod = 32.0;
constexpr std::size_t kMaxKinkSamples = 1 << 20;

/// Nonnegative functions whose zeros are the only places the norm integrand
/// can fail to be smooth: |lambda_i| and consecutive gaps of the sorted
/// spectrum of the derivative, plus |lambda_min + lambda_max| for p = inf.
RealVector kink_indicators(const BohrSeries& series, SchattenOrder p, double t) {
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(series.derivative(t), Eigen::EigenvaluesOnly);
  const RealVector& ev = eig.eigenvalues();
  const Eigen::Index n = ev.size();
  RealVector out(2 * n - 1 + (p.is_infinite() ? 1 : 0));
  for (Eigen::Index i = 0; i < n; ++i) out(i) = std::abs(ev(i));
  for (Eigen::Index i = 0; i + 1 < n; ++i) out(n + i) = ev(i + 1) - ev(i);
  if (p.is_infinite()) out(2 * n - 1) = std::abs(ev(0) + ev(n - 1));
  return out;
}

/// Golden-section minimum of indicator `i` on [lo, hi].
double refine_minimum(const BohrSeries& series, SchattenOrder p, Eigen::Index i, double lo, double hi) {
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - r * (hi - lo);
  double x2 = lo + r * (hi - lo);
  double f1 = kink_indicators(series, p, x1)(i);
  double f2 = kink_indicators(series, p, x2)(i);
  while (hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, hi)) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = kink_indicators(series, p, x1)(i);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = kink_indicators(series, p, x2)(i);
    }
  }
  return 0.5 * (lo + hi);
}

/// Ascending interior points of (0, tau) at sampled local minima of the
/// indicators; splitting at a smooth minimum is harmless.
std::vector<double> kinks(const BohrSeries& series, SchattenOrder p, double tau) {
  double omega = 0.0;
  for (double f : series.frequencies()) omega = std::max(omega, std::abs(f));
  if (omega == 0.0) return {};
  const double periods = tau * omega / (2.0 * std::numbers::pi);
  const auto samples =
      std::min(kMaxKinkSamples, static_cast<std::size_t>(std::ceil(periods * kKinkSamplesPerPeriod)) + 16);
  const auto time = [&](std::size_t k) { return tau * static_cast<double>(k) / static_cast<double>(samples); };
  std::vector<RealVector> g;
  g.reserve(samples + 1);
  for (std::size_t k = 0; k <= samples; ++k) g.push_back(kink_indicators(series, p, time(k)));
  std::vector<double> out;
  for (std::size_t k = 1; k < samples; ++k) {
    for (Eigen::Index i = 0; i < g[k].size(); ++i) {
      if (g[k](i) <= g[k - 1](i) && g[k](i) < g[k + 1](i)) {
        out.push_back(refine_minimum(series, p, i, time(k - 1), time(k + 1)));
      }
    }
  }
  std::sort(out.begin(), out.end());
  const double merge = 1e-12 * tau;
  out.erase(std::unique(out.begin(), out.end(), [merge](double a, double b) { return b - a <= merge; }), out.end());
  return out;
}

AveragedNorm averaged(const Evolution& ev, std::string_view label, SchattenOrder p, double tau,
                      const QuadratureConfig& quad) {
  const BohrSeries series = ev.reduced_series(label);
  if (tau == 0.0) return {hermitian_schatten_norm(series.derivative(0.0), p), 0.0};
  return time_averaged_norm(ev, label, p, tau, quad);
}

}  // namespace

double fannes_constant() { return 2.0 / std::exp(1.0); }

double schatten_distance(const DensityMatrix& rho1, const DensityMatrix& rho2, SchattenOrder p) {
  if (!(rho1.layout() == rho2.layout())) throw LayoutError("schatten_distance: layouts differ");
  return hermitian_schatten_norm(rho1.matrix() - rho2.matrix(), p);
}

AveragedNorm time_averaged_norm(const Evolution& evolution, std::string_view label, SchattenOrder p, double tau,
                                const QuadratureConfig& quad) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw ParameterError("time_averaged_norm: tau must be positive and finite");
  const BohrSeries series = evolution.reduced_series(label);
  if (series.size() == 0) return {};
  const auto integrand = [&](double t) { return hermitian_schatten_norm(series.derivative(t), p); };
  // the integrand is smooth between kinks, where the adaptive rule's error
  // estimate is trustworthy
  std::vector<double> edges{0.0};
  for (double k : kinks(series, p, tau)) {
    if (k > edges.back() + 1e-12 * tau && k < tau * (1.0 - 1e-12)) edges.push_back(k);
  }
  edges.push_back(tau);
  double value = 0.0;
  double error = 0.0;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    QuadratureConfig piece = quad;
    piece.abs_tol = quad.abs_tol * (edges[k + 1] - edges[k]);
    const QuadratureResult r = integrate(integrand, edges[k], edges[k + 1], piece);
    value += r.value;
    error += r.error_estimate;
  }
  return {value / tau, error / tau};
}

AveragedNorm time_averaged_norm(const Scenario& scenario, std::string_view label, SchattenOrder p, double tau,
                                const QuadratureConfig& quad) {
  return time_averaged_norm(Evolution(scenario), label, p, tau, quad);
}

std::optional<double> qsl_time(const Evolution& evolution, std::string_view label, SchattenOrder p, double tau,
                               const QuadratureConfig& quad) {
  const AveragedNorm lambda = time_averaged_norm(evolution, label, p, tau, quad);
  if (lambda.lambda <= tol::kLambdaFloor) return std::nullopt;
  return distance_travelled(evolution, label, p, tau) / lambda.lambda;
}

QtslReport qtsl_time(const Evolution& evolution, SchattenOrder p, double tau, const QuadratureConfig& quad) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw ParameterError("qtsl_time: tau must be nonnegative and finite");
  const std::string s(labels::kSystem);
  const std::string m(labels::kMemory);
  const SubsystemLayout& layout = evolution.scenario().layout;
  const double d_s = static_cast<double>(layout.dim_of(s));
  const double d_m = static_cast<double>(layout.dim_of(m));
  const double w_s = dimension_weight(d_s, p);
  const double w_m = dimension_weight(d_m, p);
  const double w_sm = dimension_weight(d_s * d_m, p);

  QtslReport r;
  r.p = p.value();
  r.tau = tau;
  r.dist_s = distance_travelled(evolution, s, p, tau);
  r.dist_m = distance_travelled(evolution, m, p, tau);
  const AveragedNorm ls = averaged(evolution, s, p, tau, quad);
  const AveragedNorm lm = averaged(evolution, m, p, tau, quad);
  r.lambda_s = ls.lambda;
  r.lambda_m = lm.lambda;
  r.quadrature_error_estimate = std::max(ls.error_estimate, lm.error_estimate);

  // at tau = 0 no distance has been covered yet
  const auto time_of = [&](double dist, double lambda) -> std::optional<double> {
    if (lambda <= tol::kLambdaFloor) return std::nullopt;
    return tau == 0.0 ? 0.0 : dist / lambda;
  };
  r.t_s = time_of(r.dist_s, r.lambda_s);
  r.t_m = time_of(r.dist_m, r.lambda_m);

  r.b_star = w_s * r.lambda_s + w_m * r.lambda_m;
  r.lambda_star = r.b_star / w_sm;
  r.t_star_b_star = w_s * r.dist_s + w_m * r.dist_m;
  if (r.t_s || r.t_m) {
    const double printed = (w_s * r.lambda_s * r.t_s.value_or(0.0) + w_m * r.lambda_m * r.t_m.value_or(0.0)) / r.b_star;
    const double simplified = tau == 0.0 ? 0.0 : r.t_star_b_star / r.b_star;
    r.t_star = printed;
    r.identity_residual = std::abs(printed - simplified);
    if (tau == 0.0) r.t_star_b_star = 0.0;
  }

  r.ledger = compute_ledger(evolution, tau);
  const double beta = evolution.scenario().beta;
  const double two_over_e = fannes_constant();
  r.fannes_margin = w_s * r.dist_s + w_m * r.dist_m + two_over_e - std::abs(r.ledger.entropy.system + r.ledger.entropy.memory);

  r.stein_exponent = r.ledger.relative_entropy_final;
  r.hypothesis_bound = r.t_star_b_star - beta * r.ledger.q_eff + two_over_e;
  r.hypothesis_margin = r.hypothesis_bound - r.stein_exponent;
  r.dynamical_landauer_margin = r.t_star_b_star + two_over_e - (r.stein_exponent + beta * r.ledger.q_eff);
  return r;
}

QtslReport qtsl_time(const Scenario& scenario, SchattenOrder p, double tau, const QuadratureConfig& quad) {
  return qtsl_time(Evolution(scenario), p, tau, quad);
}

double bekenstein_bound(const Evolution& evolution, SchattenOrder p, double tau, const QuadratureConfig& quad) {
  return qtsl_time(evolution, p, tau, quad).b_star;
}

AuditMargin classify_margin(double margin) {
  AuditMargin out;
  out.margin = margin;
  out.violated = !(margin > -tol::kAuditFlag);
  out.flagged = !out.violated && margin < 0.0;
  return out;
}

AuditMargin fannes_audit(const Evolution& evolution, SchattenOrder p, double tau, const QuadratureConfig& quad) {
  return classify_margin(qtsl_time(evolution, p, tau, quad).fannes_margin);
}

AuditMargin dynamical_landauer_audit(const Evolution& evolution, SchattenOrder p, double tau,
                                     const QuadratureConfig& quad) {
  return classify_margin(qtsl_time(evolution, p, tau, quad).dynamical_landauer_margin);
}

HypothesisTest hypothesis_testing_bound(const Evolution& evolution, SchattenOrder p, double tau,
                                        const QuadratureConfig& quad) {
  const QtslReport r = qtsl_time(evolution, p, tau, quad);
  HypothesisTest out;
  out.stein_exponent = r.stein_exponent;
  out.upper_bound = r.hypothesis_bound;
  out.margin = r.hypothesis_margin;
  out.infinite_exponent = std::isinf(r.stein_exponent);
  return out;
}

}  // namespace autotherm
