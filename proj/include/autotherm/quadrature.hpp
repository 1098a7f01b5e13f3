// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace autotherm {

/// Globally adaptive bisection with a 10-point Gauss-Legendre rule per
/// panel. A panel's error is |G(panel) - G(left) - G(right)|; the panel with
/// the largest error is split until the summed error meets the tolerance.
struct QuadratureConfig {
  double abs_tol = 1e-9;
  /// Additional relative target; the stopping test is
  /// error <= max(abs_tol, rel_tol * |value|).
  double rel_tol = 0.0;
  int max_depth = 40;
  /// Uniform panels the interval is cut into before adapting.
  int initial_panels = 8;
  std::size_t max_panels = 1'000'000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

/// Throws QuadratureError carrying the partial value when a panel would
/// exceed max_depth or the panel budget runs out.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& config = {});

double gauss_legendre_10(const std::function<double(double)>& f, double a, double b);

}  // namespace autotherm
