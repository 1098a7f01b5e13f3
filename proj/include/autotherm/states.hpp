// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "autotherm/tensor.hpp"

namespace autotherm {

namespace tol {
inline constexpr double kDensity = 1e-10;
/// Eigenvalues below this are treated as exact zeros in entropies.
inline constexpr double kEigFloor = 1e-14;
/// Largest mass of rho on the kernel of sigma still treated as supported.
inline constexpr double kSupport = 1e-10;
}  // namespace tol

/// Hermitian, unit-trace, positive semidefinite operator (each within
/// tol::kDensity). Construction validates; invalid input throws ContractError.
class DensityMatrix {
 public:
  explicit DensityMatrix(CompositeOperator op);

  [[nodiscard]] const CompositeOperator& op() const noexcept { return op_; }
  [[nodiscard]] const Matrix& matrix() const noexcept { return op_.matrix(); }
  [[nodiscard]] const SubsystemLayout& layout() const noexcept { return op_.layout(); }
  [[nodiscard]] const RealVector& spectrum() const noexcept { return spectrum_; }
  [[nodiscard]] double purity() const;

 private:
  CompositeOperator op_;
  RealVector spectrum_;
};

struct EntropyValue {
  double nats = 0.0;
};

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);
DensityMatrix partial_trace(const DensityMatrix& rho, const LabelSet& keep);

DensityMatrix gibbs_state(const CompositeOperator& h, double beta);
DensityMatrix maximally_mixed(const SubsystemLayout& layout);
DensityMatrix diagonal_state(std::span<const double> probabilities, const SubsystemLayout& layout);

enum class Normalization { kRequireUnit, kNormalize };
DensityMatrix pure_state_from_amplitudes(std::span<const Complex> amplitudes, const SubsystemLayout& layout,
                                         Normalization mode = Normalization::kRequireUnit);

/// -sum p ln p over a spectrum, with entries below tol::kEigFloor dropped.
double entropy_of_spectrum(const RealVector& spectrum);
EntropyValue von_neumann_entropy(const DensityMatrix& rho);

struct RelativeEntropy {
  double value = 0.0;  // +inf when rho leaves the support of sigma
  double kernel_mass = 0.0;
  [[nodiscard]] bool finite() const noexcept { return value != std::numeric_limits<double>::infinity(); }
};

RelativeEntropy relative_entropy_detail(const DensityMatrix& rho, const DensityMatrix& sigma);
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Layout {system, memory} of the two-qubit families below.
SubsystemLayout system_memory_layout();

/// (|-,+> + |+>(cos t |+> + sin t |->)) / sqrt 2 on system (x) memory.
DensityMatrix cmaybe_state(double theta);

enum class WernerBasis { kZX, kXX };

/// (1 - lambda)/4 * 1 + lambda |psi><psi| with
///   ZX: |psi> = cos phi |0,+> + sin phi |1,->
///   XX: |psi> = cos phi |+,+> + sin phi |-,->
DensityMatrix werner_like_state(double lambda, double phi, WernerBasis basis);

/// Mixing weight 1/(1 + 2 sin 2phi) at which the family crosses between
/// separable and entangled; empty where the expression has no root in (0, 1].
std::optional<double> werner_separability_edge(double phi);

}  // namespace autotherm
