// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include "autotherm/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "autotherm/csv.hpp"
#include "autotherm/errors.hpp"

namespace autotherm {

// ---------------------------------------------------------------- Bohr series

BohrSeries::BohrSeries(std::vector<double> frequencies, std::vector<Matrix> coefficients)
    : frequencies_(std::move(frequencies)), coefficients_(std::move(coefficients)) {
  if (frequencies_.size() != coefficients_.size()) throw ParameterError("BohrSeries: size mismatch");
}

Matrix BohrSeries::value(double t) const {
  if (coefficients_.empty()) return Matrix();
  Matrix out = Matrix::Zero(coefficients_.front().rows(), coefficients_.front().cols());
  for (std::size_t k = 0; k < frequencies_.size(); ++k) out += std::polar(1.0, -frequencies_[k] * t) * coefficients_[k];
  return out;
}

Matrix BohrSeries::derivative(double t) const {
  if (coefficients_.empty()) return Matrix();
  Matrix out = Matrix::Zero(coefficients_.front().rows(), coefficients_.front().cols());
  for (std::size_t k = 0; k < frequencies_.size(); ++k) {
    out += (Complex(0.0, -frequencies_[k]) * std::polar(1.0, -frequencies_[k] * t)) * coefficients_[k];
  }
  return out;
}

// ---------------------------------------------------------------- evolution

namespace {

DensityMatrix initial_total(const Scenario& s) { return tensor_product(s.initial_wbar, s.initial_work); }

DensityMatrix bath_gibbs(const Scenario& s, const BuiltHamiltonians& built) {
  return gibbs_state(built.local_bare.at(std::string(labels::kBath)), s.beta);
}

}  // namespace

Evolution::Evolution(Scenario scenario)
    : scenario_(std::move(scenario)),
      diagnostics_(validate_scenario(scenario_)),
      built_(build(scenario_)),
      propagator_(built_.h_total),
      rho0_(initial_total(scenario_)),
      bath_eq_(bath_gibbs(scenario_, built_)) {
  const Matrix& v = propagator_.eigen().vectors;
  rho0_eigen_ = v.adjoint() * rho0_.matrix() * v;
}

DensityMatrix Evolution::initial_marginal(std::string_view label) const {
  return initial_marginal(LabelSet{std::string(label)});
}

DensityMatrix Evolution::initial_marginal(const LabelSet& keep) const { return partial_trace(rho0_, keep); }

Matrix Evolution::rotated_state(double t) const {
  const RealVector& lambda = propagator_.eigen().values;
  const Eigen::Index n = lambda.size();
  Eigen::VectorXcd phase(n);
  for (Eigen::Index k = 0; k < n; ++k) phase(k) = std::polar(1.0, -lambda(k) * t);
  // (V^dagger rho(t) V)_ij = rho0_ij exp(-i (l_i - l_j) t)
  const Matrix evolved = phase.asDiagonal() * rho0_eigen_ * phase.conjugate().asDiagonal();
  const Matrix& v = propagator_.eigen().vectors;
  return v * evolved * v.adjoint();
}

DensityMatrix Evolution::total_state(double t) const {
  return DensityMatrix(CompositeOperator(scenario_.layout, rotated_state(t)));
}

DensityMatrix Evolution::reduced_state(double t, std::string_view label) const {
  return reduced_state(t, LabelSet{std::string(label)});
}

DensityMatrix Evolution::reduced_state(double t, const LabelSet& keep) const {
  return DensityMatrix(partial_trace(CompositeOperator(scenario_.layout, rotated_state(t)), keep));
}

CompositeOperator Evolution::state_derivative(double t) const {
  const CompositeOperator rho(scenario_.layout, rotated_state(t));
  return Complex(0.0, -1.0) * commutator(built_.h_total, rho);
}

CompositeOperator Evolution::state_derivative(double t, std::string_view label) const {
  return partial_trace(state_derivative(t), {std::string(label)});
}

DensityMatrix Evolution::weak_coupling_reference(double t) const {
  const CompositeOperator rho(scenario_.layout, rotated_state(t));
  DensityMatrix out = bath_eq_;
  for (auto label : {labels::kSystem, labels::kMemory, labels::kWork}) {
    out = tensor_product(out, DensityMatrix(partial_trace(rho, {std::string(label)})));
  }
  return out;
}

DensityMatrix Evolution::wbar_channel(const DensityMatrix& input, double t) const {
  const DensityMatrix full = tensor_product(input, scenario_.initial_work);
  if (!(full.layout() == scenario_.layout)) throw LayoutError("wbar_channel: input must live on bath, system, memory");
  const CompositeOperator u = propagator_.at(t);
  const CompositeOperator out(scenario_.layout, u.matrix() * full.matrix() * u.matrix().adjoint());
  return DensityMatrix(partial_trace(out, wbar_labels(scenario_.layout)));
}

BohrSeries Evolution::reduced_series(std::string_view label) const {
  const HermitianEigen& eig = propagator_.eigen();
  const Eigen::Index n = eig.values.size();
  const LabelSet keep{std::string(label)};
  const auto dx = static_cast<Eigen::Index>(scenario_.layout.dim_of(label));

  struct Pair {
    double omega;
    Eigen::Index i, j;
  };
  std::vector<Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(n * n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (rho0_eigen_(i, j) != Complex{}) pairs.push_back({eig.values(i) - eig.values(j), i, j});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.omega < b.omega; });

  const double scale = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
  const double merge_tol = 1e-12 * scale;
  std::vector<double> freqs;
  std::vector<Matrix> coeffs;
  std::size_t k = 0;
  while (k < pairs.size()) {
    const double anchor = pairs[k].omega;
    Matrix c = Matrix::Zero(dx, dx);
    double freq_sum = 0.0;
    std::size_t count = 0;
    for (; k < pairs.size() && pairs[k].omega - anchor <= merge_tol; ++k) {
      const auto& p = pairs[k];
      const CompositeOperator outer(scenario_.layout, eig.vectors.col(p.i) * eig.vectors.col(p.j).adjoint());
      c += rho0_eigen_(p.i, p.j) * partial_trace(outer, keep).matrix();
      freq_sum += p.omega;
      ++count;
    }
    if (c.cwiseAbs().maxCoeff() > 1e-18) {
      freqs.push_back(freq_sum / static_cast<double>(count));
      coeffs.push_back(std::move(c));
    }
  }
  return BohrSeries(std::move(freqs), std::move(coeffs));
}

// ---------------------------------------------------------------- free functions

DensityMatrix total_state(const Scenario& scenario, double t) { return Evolution(scenario).total_state(t); }

DensityMatrix reduced_state(const Scenario& scenario, double t, std::string_view label) {
  return Evolution(scenario).reduced_state(t, label);
}

CompositeOperator state_derivative(const Scenario& scenario, double t, std::string_view label) {
  return Evolution(scenario).state_derivative(t, label);
}

DensityMatrix weak_coupling_reference(const Scenario& scenario, double t) {
  return Evolution(scenario).weak_coupling_reference(t);
}

Trajectory sample_trajectory(const Evolution& evolution, std::span<const double> times, const LabelSet& labels) {
  if (!std::is_sorted(times.begin(), times.end())) throw ParameterError("trajectory times must be ascending");
  Trajectory out;
  out.times.assign(times.begin(), times.end());
  for (double t : times) {
    DensityMatrix rho = evolution.total_state(t);
    for (const auto& label : labels) out.reduced[label].push_back(partial_trace(rho, {label}));
    out.total_states.push_back(std::move(rho));
  }
  return out;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& trajectory) {
  std::vector<std::string> header{"time"};
  for (const auto& [label, states] : trajectory.reduced) {
    if (states.empty()) continue;
    const auto d = states.front().matrix().rows();
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        const std::string idx = "_" + std::to_string(i) + "_" + std::to_string(j);
        header.push_back(label + "_re" + idx);
        header.push_back(label + "_im" + idx);
      }
    }
  }
  csv::write_header(os, header);
  for (std::size_t r = 0; r < trajectory.times.size(); ++r) {
    csv::Row row;
    row.add(trajectory.times[r]);
    for (const auto& [label, states] : trajectory.reduced) {
      const Matrix& m = states[r].matrix();
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.add(m(i, j).real()).add(m(i, j).imag());
      }
    }
    row.write(os);
  }
}

}  // namespace autotherm
