// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include "random.hpp"

#include <Eigen/QR>

namespace autotherm::testing {

Matrix random_matrix(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> g;
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  return m;
}

Matrix random_hermitian(Eigen::Index n, Rng& rng) {
  const Matrix m = random_matrix(n, rng);
  return 0.5 * (m + m.adjoint());
}

Matrix random_unitary(Eigen::Index n, Rng& rng) {
  const Eigen::HouseholderQR<Matrix> qr(random_matrix(n, rng));
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    q.col(k) *= std::abs(d) > 0.0 ? d / std::abs(d) : Complex(1.0);
  }
  return q;
}

DensityMatrix random_density(const SubsystemLayout& layout, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(layout.total_dim());
  const Matrix w = random_matrix(n, rng);
  Matrix rho = w * w.adjoint();
  rho /= rho.trace();
  return DensityMatrix(CompositeOperator(layout, 0.5 * (rho + rho.adjoint())));
}

Scenario random_catalytic_scenario(Rng& rng, const RandomScenarioOptions& options) {
  using labels::kBath, labels::kSystem, labels::kMemory, labels::kWork;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const SubsystemLayout layout = SubsystemLayout::qubits({kBath, kSystem, kMemory, kWork});

  // V = V_b (x) V_sm with V_b diagonal, so Z_b (x) 1 stays diagonal under V
  Matrix v_b = Matrix::Zero(2, 2);
  v_b(0, 0) = std::polar(1.0, 3.0 * u(rng));
  v_b(1, 1) = std::polar(1.0, 3.0 * u(rng));
  const Matrix v = kron(v_b, random_unitary(4, rng));

  Matrix block = Matrix::Zero(16, 16);
  for (int j = 0; j < options.terms; ++j) {
    Eigen::VectorXcd r(8);
    for (Eigen::Index k = 0; k < 8; ++k) r(k) = options.strength * u(rng);
    const Matrix a = v * r.asDiagonal() * v.adjoint();
    Matrix b = Matrix::Zero(2, 2);
    b(0, 0) = u(rng);
    b(1, 1) = u(rng);
    block += kron(a, b);
  }
  block = 0.5 * (block + block.adjoint());

  std::vector<HamiltonianTerm> bare;
  if (options.bath_hamiltonian) bare.push_back(PauliTerm{0.5 + 0.5 * std::abs(u(rng)), {{std::string(kBath), Pauli::kZ}}});
  bare.push_back(PauliTerm{u(rng), {{std::string(kWork), Pauli::kZ}}});

  const SubsystemLayout bath_layout = SubsystemLayout::qubits({kBath});
  CompositeOperator h_b = CompositeOperator::zero(bath_layout);
  for (const auto& t : bare) {
    const auto& p = std::get<PauliTerm>(t);
    if (p.factors.contains(std::string(kBath))) h_b = realize(t, bath_layout);
  }
  const DensityMatrix gamma = gibbs_state(h_b, 1.0);
  const DensityMatrix rho_sm = random_density(SubsystemLayout::qubits({kSystem, kMemory}), rng);
  const std::vector<Complex> excited{0.0, 1.0};

  return Scenario{
      "random_catalytic",
      layout,
      1.0,
      std::move(bare),
      {DenseTerm{1.0, {std::string(kBath), std::string(kSystem), std::string(kMemory), std::string(kWork)}, block}},
      tensor_product(gamma, rho_sm),
      pure_state_from_amplitudes(excited, SubsystemLayout::qubits({kWork})),
  };
}

}  // namespace autotherm::testing
