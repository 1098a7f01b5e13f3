// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include "autotherm/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <tuple>
#include <vector>

#include "autotherm/errors.hpp"

namespace autotherm {
namespace {

constexpr std::array<double, 5> kNodes{0.14887433898163121088, 0.43339539412924719080, 0.67940956829902440623,
                                       0.86506336668898451073, 0.97390652851717172008};
constexpr std::array<double, 5> kWeights{0.29552422471475287017, 0.26926671930999635509, 0.21908636251598204400,
                                         0.14945134915058059315, 0.06667134430868813759};

struct Panel {
  double a, b;
  double left, right;  // rule applied to each half
  double error;
  int depth;

  [[nodiscard]] double value() const { return left + right; }
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel make_panel(const std::function<double(double)>& f, double a, double b, double whole, int depth) {
  const double m = 0.5 * (a + b);
  Panel p{a, b, gauss_legendre_10(f, a, m), gauss_legendre_10(f, m, b), 0.0, depth};
  p.error = std::abs(whole - p.value());
  return p;
}

}  // namespace

double gauss_legendre_10(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t k = 0; k < kNodes.size(); ++k) {
    const double dx = h * kNodes[k];
    acc += kWeights[k] * (f(c - dx) + f(c + dx));
  }
  return h * acc;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, const QuadratureConfig& cfg) {
  if (!(cfg.abs_tol > 0.0) && !(cfg.rel_tol > 0.0)) throw ParameterError("quadrature tolerance must be positive");
  if (cfg.initial_panels < 1) throw ParameterError("quadrature needs at least one initial panel");
  if (a == b) return {};
  if (b < a) {
    QuadratureResult r = integrate(f, b, a, cfg);
    r.value = -r.value;
    return r;
  }

  std::priority_queue<Panel> heap;
  const double width = (b - a) / cfg.initial_panels;
  for (int k = 0; k < cfg.initial_panels; ++k) {
    const double lo = a + k * width;
    const double hi = k + 1 == cfg.initial_panels ? b : lo + width;
    heap.push(make_panel(f, lo, hi, gauss_legendre_10(f, lo, hi), 0));
  }

  auto totals = [&heap] {
    // exact resummation; the heap's container is not otherwise reachable
    std::priority_queue<Panel> copy = heap;
    double value = 0.0;
    double error = 0.0;
    while (!copy.empty()) {
      value += copy.top().value();
      error += copy.top().error;
      copy.pop();
    }
    return std::pair{value, error};
  };

  auto [value, error] = totals();
  while (error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) {
    const Panel worst = heap.top();
    if (worst.depth >= cfg.max_depth || heap.size() >= cfg.max_panels) {
      std::ostringstream msg;
      msg << "quadrature did not converge on [" << a << ", " << b << "]: error estimate " << error
          << (worst.depth >= cfg.max_depth ? " at maximum depth" : " with panel budget exhausted");
      throw QuadratureError(msg.str(), value, error);
    }
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    const Panel lo = make_panel(f, worst.a, m, worst.left, worst.depth + 1);
    const Panel hi = make_panel(f, m, worst.b, worst.right, worst.depth + 1);
    value += lo.value() + hi.value() - worst.value();
    error += lo.error + hi.error - worst.error;
    heap.push(lo);
    heap.push(hi);
    if (!(error > std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value)))) {
      std::tie(value, error) = totals();
    }
  }
  return QuadratureResult{value, error, heap.size()};
}

}  // namespace autotherm
