// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>
#include <cmath>

#include "autotherm/errors.hpp"
#include "autotherm/hamiltonian.hpp"
#include "random.hpp"

using namespace autotherm;
using namespace autotherm::testing;
using Catch::Matchers::WithinAbs;

TEST_CASE("built-in families validate and conserve energy") {
  for (const char* spec : {"cmaybe:theta=0.7", "cmaybe:theta=0.7,sb=0", "werner_zx:lambda=0.4,phi=0.9",
                           "werner_xx:lambda=0.8,phi=2.1", "swap"}) {
    INFO(spec);
    const Scenario s = builtin_scenario(spec);
    const ScenarioDiagnostics d = validate_scenario(s);
    CHECK(d.bath_marginal_deviation < 1e-12);
    CHECK(d.warnings.empty());
    const BuiltHamiltonians built = build(s);
    CHECK(check_ideal_memory(built).ideal);
    CHECK(built.h_total.is_hermitian());
  }
  CHECK(check_energy_conservation(build(builtin_scenario("cmaybe:theta=0.3"))) < 1e-12);
}

TEST_CASE("the C-maybe Hamiltonian is diagonal with the listed terms") {
  const BuiltHamiltonians built = build(builtin_scenario("cmaybe:theta=0.3"));
  const Matrix& h = built.h_total.matrix();
  CHECK((h - Matrix(h.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
  // |b s m w> = |0000>: Zs + Zb + Im + Zw + ZsZw + ZsZm + ZbZs + ZbZm = 8
  CHECK_THAT(h(0, 0).real(), WithinAbs(8.0, 1e-15));
  // |1111>: -1 - 1 + 1 - 1 + 1 + 1 + 1 + 1 = 2
  CHECK_THAT(h(15, 15).real(), WithinAbs(2.0, 1e-15));
  CHECK(built.parts.contains("bare:system"));
  CHECK(built.parts.contains("int:system,work"));
}

TEST_CASE("system-bath coupling parameter scales only the Z_b Z_s term") {
  const BuiltHamiltonians a = build(builtin_scenario("cmaybe:theta=0.3,sb=0"));
  const BuiltHamiltonians b = build(builtin_scenario("cmaybe:theta=0.3,sb=1"));
  const CompositeOperator zbzs = embed(kron(pauli_matrix(Pauli::kZ), pauli_matrix(Pauli::kZ)), {"bath", "system"},
                                       a.h_total.layout());
  CHECK(((b.h_total - a.h_total).matrix() - zbzs.matrix()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("validation rejects broken scenarios") {
  Scenario s = builtin_scenario("cmaybe:theta=0.3");
  SECTION("non-Gibbs bath") {
    s.initial_wbar = tensor_product(maximally_mixed(SubsystemLayout::qubits({"bath"})), cmaybe_state(0.3));
    CHECK_THROWS_AS(validate_scenario(s), ScenarioError);
  }
  SECTION("bare term on two factors") {
    s.bare_terms.push_back(PauliTerm{1.0, {{"system", Pauli::kZ}, {"memory", Pauli::kZ}}});
    CHECK_THROWS_AS(validate_scenario(s), ScenarioError);
  }
  SECTION("non-hermitian dense block") {
    Matrix block = Matrix::Zero(2, 2);
    block(0, 1) = 1.0;
    s.interaction_terms.push_back(DenseTerm{1.0, {"system"}, block});
    CHECK_THROWS_AS(validate_scenario(s), ScenarioError);
  }
  SECTION("wrong factor order") {
    s.layout = SubsystemLayout::qubits({"system", "bath", "memory", "work"});
    CHECK_THROWS_AS(validate_scenario(s), ScenarioError);
  }
  SECTION("nonpositive beta") {
    s.beta = 0.0;
    CHECK_THROWS_AS(validate_scenario(s), ScenarioError);
  }
}

TEST_CASE("a non-degenerate memory is a warning, not an error") {
  Scenario s = builtin_scenario("cmaybe:theta=0.3");
  s.bare_terms.push_back(PauliTerm{0.5, {{"memory", Pauli::kZ}}});
  const ScenarioDiagnostics d = validate_scenario(s);
  CHECK_FALSE(d.warnings.empty());
  CHECK_THAT(d.memory_identity_deviation, WithinAbs(0.5, 1e-14));
  CHECK_FALSE(check_ideal_memory(build(s)).ideal);
}

TEST_CASE("built-in spec parsing") {
  const BuiltinSpec spec = parse_builtin_spec("werner_zx:lambda=0.5,phi=0.6,sb=0");
  CHECK(spec.family == BuiltinFamily::kWernerZX);
  CHECK(spec.params.lambda == 0.5);
  CHECK(spec.params.phi == 0.6);
  CHECK(spec.params.system_bath_coupling == 0.0);
  CHECK_THROWS_AS(parse_builtin_spec("ghz"), ParameterError);
  CHECK_THROWS_AS(parse_builtin_spec("cmaybe:gamma=1"), ParameterError);
  CHECK_THROWS_AS(parse_builtin_spec("cmaybe:theta=abc"), ParameterError);
  CHECK(builtin_family_name(parse_builtin_family("swap")) == "swap_counterexample");
}

TEST_CASE("random catalytic scenarios are valid") {
  Rng rng(kSeed);
  for (int trial = 0; trial < 5; ++trial) {
    const Scenario s = random_catalytic_scenario(rng);
    CHECK_NOTHROW(validate_scenario(s));
  }
}
