// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include "autotherm/errors.hpp"
#include "autotherm/hamiltonian.hpp"
#include "autotherm/tensor.hpp"
#include "brute.hpp"
#include "random.hpp"

using namespace autotherm;
using namespace autotherm::testing;
using Catch::Matchers::WithinAbs;

namespace {

SubsystemLayout four() { return SubsystemLayout::qubits({"bath", "system", "memory", "work"}); }

SubsystemLayout mixed_dims() { return SubsystemLayout({{"a", 2}, {"b", 3}, {"c", 2}}); }

}  // namespace

TEST_CASE("layout indices are row-major with the first factor slowest") {
  const SubsystemLayout l = mixed_dims();
  CHECK(l.total_dim() == 12);
  CHECK(l.stride(0) == 6);
  CHECK(l.stride(1) == 2);
  CHECK(l.stride(2) == 1);
  CHECK(l.position("c") == 2);
  CHECK(l.dim_of("b") == 3);
  CHECK(l.restricted_to({"c", "a"}).labels() == LabelSet{"a", "c"});
  CHECK(l.complement({"b"}).labels() == LabelSet{"a", "c"});
  CHECK_THROWS_AS(SubsystemLayout({{"a", 2}, {"a", 2}}), LayoutError);
  CHECK_THROWS_AS(l.position("z"), LayoutError);
}

TEST_CASE("kron places the left factor slowest") {
  const Matrix z = pauli_matrix(Pauli::kZ);
  const Matrix x = pauli_matrix(Pauli::kX);
  const Matrix zx = kron(z, x);
  CHECK(zx(0, 1) == Complex(1.0));
  CHECK(zx(2, 3) == Complex(-1.0));
  CHECK(zx(0, 2) == Complex(0.0));
}

TEST_CASE("partial trace matches the index-by-index oracle") {
  Rng rng(kSeed);
  const SubsystemLayout l = mixed_dims();
  const std::vector<std::size_t> dims{2, 3, 2};
  for (int trial = 0; trial < 10; ++trial) {
    const CompositeOperator a(l, random_matrix(12, rng));
    const std::vector<std::pair<LabelSet, std::vector<std::size_t>>> cases{
        {{"a"}, {0}}, {{"b"}, {1}}, {{"c"}, {2}}, {{"a", "c"}, {0, 2}}, {{"b", "c"}, {1, 2}}, {{"a", "b", "c"}, {0, 1, 2}}};
    for (const auto& [keep, positions] : cases) {
      const Matrix fast = partial_trace(a, keep).matrix();
      const Matrix slow = brute_partial_trace(a.matrix(), dims, positions);
      CHECK((fast - slow).cwiseAbs().maxCoeff() < 1e-13);
    }
  }
}

TEST_CASE("partial trace keeps layout order regardless of the request order") {
  Rng rng(kSeed + 1);
  const CompositeOperator a(four(), random_matrix(16, rng));
  CHECK(partial_trace(a, {"work", "system"}).layout().labels() == LabelSet{"system", "work"});
  CHECK_THROWS_AS(partial_trace(a, {"nope"}), LayoutError);
}

TEST_CASE("partial transpose matches the oracle and preserves hermiticity") {
  Rng rng(kSeed + 2);
  const SubsystemLayout l = mixed_dims();
  const std::vector<std::size_t> dims{2, 3, 2};
  for (int trial = 0; trial < 10; ++trial) {
    const CompositeOperator h(l, random_hermitian(12, rng));
    const Matrix fast = partial_transpose(h, {"a", "b"}).matrix();
    CHECK((fast - brute_partial_transpose(h.matrix(), dims, {0, 1})).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((fast - fast.adjoint()).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("partial transpose over everything is the full transpose") {
  Rng rng(kSeed + 3);
  const CompositeOperator a(four(), random_matrix(16, rng));
  CHECK((partial_transpose(a, four().labels()).matrix() - a.matrix().transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("permuting factors is undone by the inverse permutation") {
  Rng rng(kSeed + 4);
  const CompositeOperator a(mixed_dims(), random_matrix(12, rng));
  const CompositeOperator p = permute_subsystems(a, {"c", "a", "b"});
  CHECK(p.layout().labels() == LabelSet{"c", "a", "b"});
  const CompositeOperator back = permute_subsystems(p, {"a", "b", "c"});
  CHECK((back.matrix() - a.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("embed respects the block's label order") {
  const Matrix zx = kron(pauli_matrix(Pauli::kZ), pauli_matrix(Pauli::kX));
  const CompositeOperator e1 = embed(zx, {"system", "work"}, four());
  const CompositeOperator e2 = embed(kron(pauli_matrix(Pauli::kX), pauli_matrix(Pauli::kZ)), {"work", "system"}, four());
  CHECK((e1.matrix() - e2.matrix()).cwiseAbs().maxCoeff() == 0.0);
  const Matrix expected = kron(kron(kron(Matrix::Identity(2, 2), pauli_matrix(Pauli::kZ)), Matrix::Identity(2, 2)),
                               pauli_matrix(Pauli::kX));
  CHECK((e1.matrix() - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("Schatten norms agree with the singular-value oracle") {
  Rng rng(kSeed + 5);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(16, rng);
    const Matrix h = random_hermitian(16, rng);
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      CHECK_THAT(schatten_norm(a, SchattenOrder(p)), WithinAbs(brute_schatten(a, p), 1e-10));
      CHECK_THAT(hermitian_schatten_norm(h, SchattenOrder(p)), WithinAbs(brute_schatten(h, p), 1e-10));
    }
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THAT(schatten_norm(a, SchattenOrder::infinity()), WithinAbs(brute_schatten(a, inf), 1e-10));
    CHECK_THAT(spectral_norm(a), WithinAbs(brute_schatten(a, inf), 1e-10));
  }
}

TEST_CASE("two-by-two hermitian norms use the closed form correctly") {
  Rng rng(kSeed + 6);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix h = random_hermitian(2, rng);
    for (double p : {1.0, 2.0, 4.0}) {
      CHECK_THAT(hermitian_schatten_norm(h, SchattenOrder(p)), WithinAbs(brute_schatten(h, p), 1e-12));
    }
  }
}

TEST_CASE("Schatten order validation") {
  CHECK_THROWS_AS(SchattenOrder(0.5), ParameterError);
  CHECK(parse_schatten_order("inf").is_infinite());
  CHECK(parse_schatten_order("2").value() == 2.0);
  CHECK_THROWS_AS(parse_schatten_order("two"), ParameterError);
  CHECK(SchattenOrder(2.0).dual_exponent() == 0.5);
}

TEST_CASE("propagator matches a Taylor-series exponential and is unitary") {
  Rng rng(kSeed + 7);
  const CompositeOperator h(four(), random_hermitian(16, rng));
  const Propagator prop(h);
  for (double t : {0.0, 0.3, 1.7, -2.2}) {
    const CompositeOperator u = prop.at(t);
    CHECK((u.matrix() - brute_expm_i(h.matrix(), t)).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(u.unitarity_residual() < 1e-12);
  }
}

TEST_CASE("hermitian_eig rejects non-hermitian input") {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eig(a), ContractError);
}

TEST_CASE("operator Schmidt decomposition reconstructs the operator") {
  Rng rng(kSeed + 8);
  const CompositeOperator h(four(), random_hermitian(16, rng));
  const LabelSet left{"bath", "system", "memory"};
  const auto terms = operator_schmidt(h, left, {"work"});
  CHECK(terms.size() == 4);
  Matrix sum = Matrix::Zero(16, 16);
  for (const auto& t : terms) {
    sum += t.weight * kron(t.left, t.right);
    CHECK_THAT(t.left.norm(), WithinAbs(1.0, 1e-12));
    CHECK_THAT(t.right.norm(), WithinAbs(1.0, 1e-12));
  }
  CHECK((sum - h.matrix()).cwiseAbs().maxCoeff() < 1e-12);
  for (std::size_t k = 1; k < terms.size(); ++k) CHECK(terms[k - 1].weight >= terms[k].weight);
}

TEST_CASE("operator Schmidt rank of a product is one") {
  const Matrix a = kron(kron(pauli_matrix(Pauli::kZ), pauli_matrix(Pauli::kX)), pauli_matrix(Pauli::kI));
  const CompositeOperator h = embed(kron(a, pauli_matrix(Pauli::kY)), {"bath", "system", "memory", "work"}, four());
  const auto terms = operator_schmidt(h, {"bath", "system", "memory"}, {"work"});
  REQUIRE(terms.size() == 1);
  CHECK_THAT(terms[0].weight, WithinAbs(4.0, 1e-12));
}

TEST_CASE("commutator of Paulis") {
  const Matrix c = commutator(pauli_matrix(Pauli::kX), pauli_matrix(Pauli::kZ));
  CHECK_THAT(spectral_norm(c), WithinAbs(2.0, 1e-14));
}
