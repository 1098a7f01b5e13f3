// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include "autotherm/states.hpp"

#include <cmath>
#include <sstream>

#include "autotherm/errors.hpp"

namespace autotherm {
namespace {

double cheap_hermiticity_residual(const Matrix& m) {
  const Matrix diff = m - m.adjoint();
  const double frob = diff.norm();
  return frob <= tol::kDensity ? frob : spectral_norm(diff);
}

}  // namespace

DensityMatrix::DensityMatrix(CompositeOperator op) : op_(std::move(op)) {
  const Matrix& m = op_.matrix();
  const double herm = cheap_hermiticity_residual(m);
  if (herm > tol::kDensity) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (residual " << herm << ")";
    throw ContractError(msg.str());
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > tol::kDensity) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr.real() << (tr.imag() < 0 ? "-" : "+") << std::abs(tr.imag()) << "i, not 1";
    throw ContractError(msg.str());
  }
  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  spectrum_ = solver.eigenvalues();
  if (spectrum_.size() > 0 && spectrum_(0) < -tol::kDensity) {
    std::ostringstream msg;
    msg << "density matrix has negative eigenvalue " << spectrum_(0);
    throw ContractError(msg.str());
  }
}

double DensityMatrix::purity() const { return (matrix() * matrix()).trace().real(); }

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(tensor_product(a.op(), b.op()));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const LabelSet& keep) {
  return DensityMatrix(partial_trace(rho.op(), keep));
}

DensityMatrix gibbs_state(const CompositeOperator& h, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) throw ParameterError("gibbs_state: beta must be positive and finite");
  const HermitianEigen eig = hermitian_eig(h);
  // shift by the ground energy so every Boltzmann factor is <= 1
  const double ground = eig.values.size() > 0 ? eig.values(0) : 0.0;
  RealVector weights = (-(beta) * (eig.values.array() - ground)).exp().matrix();
  weights /= weights.sum();
  Matrix rho = eig.vectors * weights.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return DensityMatrix(CompositeOperator(h.layout(), std::move(rho)));
}

DensityMatrix maximally_mixed(const SubsystemLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  return DensityMatrix(CompositeOperator(layout, Matrix::Identity(d, d) / static_cast<double>(d)));
}

DensityMatrix diagonal_state(std::span<const double> probabilities, const SubsystemLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  if (static_cast<Eigen::Index>(probabilities.size()) != d) {
    throw ParameterError("diagonal_state: expected " + std::to_string(d) + " probabilities");
  }
  Matrix m = Matrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) m(k, k) = probabilities[static_cast<std::size_t>(k)];
  return DensityMatrix(CompositeOperator(layout, std::move(m)));
}

DensityMatrix pure_state_from_amplitudes(std::span<const Complex> amplitudes, const SubsystemLayout& layout,
                                         Normalization mode) {
  const auto d = static_cast<Eigen::Index>(layout.total_dim());
  if (static_cast<Eigen::Index>(amplitudes.size()) != d) {
    throw ParameterError("pure_state_from_amplitudes: expected " + std::to_string(d) + " amplitudes");
  }
  Eigen::VectorXcd psi(d);
  for (Eigen::Index k = 0; k < d; ++k) psi(k) = amplitudes[static_cast<std::size_t>(k)];
  const double norm = psi.norm();
  if (norm == 0.0) throw ParameterError("pure_state_from_amplitudes: zero vector");
  if (mode == Normalization::kNormalize) {
    psi /= norm;
  } else if (std::abs(norm * norm - 1.0) > tol::kDensity) {
    std::ostringstream msg;
    msg << "pure_state_from_amplitudes: squared norm is " << norm * norm << ", expected 1";
    throw ParameterError(msg.str());
  }
  return DensityMatrix(CompositeOperator(layout, psi * psi.adjoint()));
}

double entropy_of_spectrum(const RealVector& spectrum) {
  double s = 0.0;
  for (double p : spectrum) {
    if (p >= tol::kEigFloor) s -= p * std::log(p);
  }
  return s;
}

EntropyValue von_neumann_entropy(const DensityMatrix& rho) {
  // clamp the -0.0 of exactly pure states
  return EntropyValue{std::max(0.0, entropy_of_spectrum(rho.spectrum()))};
}

RelativeEntropy relative_entropy_detail(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (!(rho.layout() == sigma.layout())) throw LayoutError("relative_entropy: states have different layouts");
  const Matrix sym = 0.5 * (sigma.matrix() + sigma.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  const RealVector& s = solver.eigenvalues();
  const Matrix& w = solver.eigenvectors();

  RelativeEntropy out;
  double cross = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    const double mass = (w.col(i).adjoint() * rho.matrix() * w.col(i))(0, 0).real();
    if (s(i) < tol::kEigFloor) {
      out.kernel_mass += mass;
    } else {
      cross += mass * std::log(s(i));
    }
  }
  if (out.kernel_mass > tol::kSupport) {
    out.value = std::numeric_limits<double>::infinity();
    return out;
  }
  out.value = -entropy_of_spectrum(rho.spectrum()) - cross;
  return out;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return relative_entropy_detail(rho, sigma).value;
}

SubsystemLayout system_memory_layout() {
  return SubsystemLayout::qubits({labels::kSystem, labels::kMemory});
}

DensityMatrix cmaybe_state(double theta) {
  const double r = 1.0 / std::sqrt(2.0);
  // single-qubit |+>, |-> in the computational basis
  const Eigen::Vector2cd plus(r, r);
  const Eigen::Vector2cd minus(r, -r);
  const Eigen::Vector2cd chi = std::cos(theta) * plus + std::sin(theta) * minus;
  const Eigen::VectorXcd psi = r * (kron(minus, plus) + kron(plus, chi));
  const std::vector<Complex> amps(psi.data(), psi.data() + psi.size());
  return pure_state_from_amplitudes(amps, system_memory_layout(), Normalization::kNormalize);
}

DensityMatrix werner_like_state(double lambda, double phi, WernerBasis basis) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    std::ostringstream msg;
    msg << "werner_like_state: lambda must lie in [0, 1], got " << lambda;
    throw ParameterError(msg.str());
  }
  const double r = 1.0 / std::sqrt(2.0);
  const Eigen::Vector2cd zero(1.0, 0.0);
  const Eigen::Vector2cd one(0.0, 1.0);
  const Eigen::Vector2cd plus(r, r);
  const Eigen::Vector2cd minus(r, -r);
  Eigen::VectorXcd psi;
  if (basis == WernerBasis::kZX) {
    psi = std::cos(phi) * kron(zero, plus) + std::sin(phi) * kron(one, minus);
  } else {
    psi = std::cos(phi) * kron(plus, plus) + std::sin(phi) * kron(minus, minus);
  }
  const Matrix m = (1.0 - lambda) / 4.0 * Matrix::Identity(4, 4) + lambda * psi * psi.adjoint();
  return DensityMatrix(CompositeOperator(system_memory_layout(), m));
}

std::optional<double> werner_separability_edge(double phi) {
  const double s = std::sin(2.0 * phi);
  if (s < 0.0) return std::nullopt;
  return 1.0 / (1.0 + 2.0 * s);
}

}  // namespace autotherm
