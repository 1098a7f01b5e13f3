// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>
#include <cmath>
#include <numbers>

#include "autotherm/errors.hpp"
#include "autotherm/hamiltonian.hpp"
#include "autotherm/states.hpp"
#include "random.hpp"

using namespace autotherm;
using namespace autotherm::testing;
using Catch::Matchers::WithinAbs;

TEST_CASE("density matrices are validated on construction") {
  const SubsystemLayout q = SubsystemLayout::qubits({"system"});
  Matrix m = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(DensityMatrix(CompositeOperator(q, m)), ContractError);  // trace 2
  m << 1.2, 0.0, 0.0, -0.2;
  CHECK_THROWS_AS(DensityMatrix(CompositeOperator(q, m)), ContractError);  // negative
  m << 0.5, 0.5, 0.0, 0.5;
  CHECK_THROWS_AS(DensityMatrix(CompositeOperator(q, m)), ContractError);  // not hermitian
  m << 0.5, 0.5, 0.5, 0.5;
  CHECK_NOTHROW(DensityMatrix(CompositeOperator(q, m)));
}

TEST_CASE("Gibbs state of a unit Z gap") {
  const SubsystemLayout q = SubsystemLayout::qubits({"bath"});
  const DensityMatrix g = gibbs_state(CompositeOperator(q, pauli_matrix(Pauli::kZ)), 1.0);
  const double e2 = std::exp(2.0);
  CHECK_THAT(g.matrix()(0, 0).real(), WithinAbs(1.0 / (1.0 + e2), 1e-15));
  CHECK_THAT(g.matrix()(1, 1).real(), WithinAbs(e2 / (1.0 + e2), 1e-15));
  // a huge gap does not overflow
  const DensityMatrix cold = gibbs_state(CompositeOperator(q, 500.0 * pauli_matrix(Pauli::kZ)), 1.0);
  CHECK_THAT(cold.matrix()(1, 1).real(), WithinAbs(1.0, 1e-15));
  CHECK_THROWS_AS(gibbs_state(CompositeOperator(q, pauli_matrix(Pauli::kZ)), -1.0), ParameterError);
}

TEST_CASE("entropies") {
  const SubsystemLayout two = SubsystemLayout::qubits({"system", "memory"});
  CHECK_THAT(von_neumann_entropy(maximally_mixed(two)).nats, WithinAbs(std::log(4.0), 1e-14));
  const std::vector<Complex> bell{1.0 / std::numbers::sqrt2, 0.0, 0.0, 1.0 / std::numbers::sqrt2};
  const DensityMatrix phi = pure_state_from_amplitudes(bell, two);
  CHECK_THAT(von_neumann_entropy(phi).nats, WithinAbs(0.0, 1e-14));
  CHECK_THAT(von_neumann_entropy(partial_trace(phi, {"system"})).nats, WithinAbs(std::log(2.0), 1e-14));
}

TEST_CASE("relative entropy and its support") {
  const SubsystemLayout q = SubsystemLayout::qubits({"system"});
  const std::vector<double> p{0.7, 0.3};
  const std::vector<double> r{0.4, 0.6};
  const DensityMatrix rho = diagonal_state(p, q);
  const DensityMatrix sigma = diagonal_state(r, q);
  const double expected = 0.7 * std::log(0.7 / 0.4) + 0.3 * std::log(0.3 / 0.6);
  CHECK_THAT(relative_entropy(rho, sigma), WithinAbs(expected, 1e-14));
  CHECK_THAT(relative_entropy(rho, rho), WithinAbs(0.0, 1e-14));
  const std::vector<double> pure{1.0, 0.0};
  const RelativeEntropy inf = relative_entropy_detail(rho, diagonal_state(pure, q));
  CHECK_FALSE(inf.finite());
  CHECK_THAT(inf.kernel_mass, WithinAbs(0.3, 1e-14));
  CHECK(relative_entropy_detail(diagonal_state(pure, q), rho).finite());
}

TEST_CASE("mutual information equals relative entropy to the product of marginals") {
  Rng rng(kSeed);
  const SubsystemLayout three = SubsystemLayout::qubits({"bath", "system", "memory"});
  for (int trial = 0; trial < 5; ++trial) {
    const DensityMatrix rho = random_density(three, rng);
    const DensityMatrix b = partial_trace(rho, {"bath"});
    const DensityMatrix s = partial_trace(rho, {"system"});
    const DensityMatrix m = partial_trace(rho, {"memory"});
    const double mi = von_neumann_entropy(b).nats + von_neumann_entropy(s).nats + von_neumann_entropy(m).nats -
                      von_neumann_entropy(rho).nats;
    CHECK_THAT(relative_entropy(rho, tensor_product(tensor_product(b, s), m)), WithinAbs(mi, 1e-12));
  }
}

TEST_CASE("C-maybe marginals") {
  for (double theta : {0.0, 0.4, std::numbers::pi / 3.0, std::numbers::pi / 2.0, 2.5}) {
    const DensityMatrix rho = cmaybe_state(theta);
    CHECK_THAT(rho.purity(), WithinAbs(1.0, 1e-14));
    const Matrix s = partial_trace(rho, {"system"}).matrix();
    CHECK_THAT(s(0, 0).real(), WithinAbs(std::pow(std::cos(theta / 2.0), 2), 1e-14));
    CHECK_THAT(std::abs(s(0, 1)), WithinAbs(0.0, 1e-14));
  }
  const Matrix m = partial_trace(cmaybe_state(std::numbers::pi / 2.0), {"memory"}).matrix();
  CHECK((m - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("Werner-like states") {
  for (auto basis : {WernerBasis::kZX, WernerBasis::kXX}) {
    CHECK((werner_like_state(0.0, 0.3, basis).matrix() - 0.25 * Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK_THAT(werner_like_state(1.0, 0.3, basis).purity(), WithinAbs(1.0, 1e-14));
    CHECK_THROWS_AS(werner_like_state(1.2, 0.3, basis), ParameterError);
  }
  const Matrix s = partial_trace(werner_like_state(0.6, 0.4, WernerBasis::kZX), {"system"}).matrix();
  CHECK_THAT(s(0, 0).real(), WithinAbs(0.5 * (1.0 + 0.6 * std::cos(0.8)), 1e-14));
  const auto edge = werner_separability_edge(std::numbers::pi / 4.0);
  REQUIRE(edge);
  CHECK_THAT(*edge, WithinAbs(1.0 / 3.0, 1e-14));
}

TEST_CASE("pure states from amplitudes") {
  const SubsystemLayout q = SubsystemLayout::qubits({"work"});
  const std::vector<Complex> unnormalized{1.0, 1.0};
  CHECK_THROWS_AS(pure_state_from_amplitudes(unnormalized, q), ParameterError);
  const DensityMatrix plus = pure_state_from_amplitudes(unnormalized, q, Normalization::kNormalize);
  CHECK_THAT(plus.matrix()(0, 1).real(), WithinAbs(0.5, 1e-15));
}
