// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>
#include <cmath>
#include <numbers>

#include "autotherm/errors.hpp"
#include "autotherm/oracles.hpp"
#include "autotherm/scenario_io.hpp"
#include "autotherm/speed_limits.hpp"

using namespace autotherm;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = std::numbers::pi;

QuadratureConfig tight() {
  QuadratureConfig q;
  q.abs_tol = 1e-12;
  q.rel_tol = 1e-12;
  return q;
}

}  // namespace

TEST_CASE("trace distance of the C-maybe system at a quarter period") {
  const Evolution ev(builtin_scenario("cmaybe:theta=0.7853981633974483,sb=0"));
  const QtslReport r = qtsl_time(ev, SchattenOrder(1.0), kPi / 4.0);
  CHECK_THAT(r.dist_s, WithinAbs(0.5, 1e-13));
}

TEST_CASE("averaged norms agree with the closed forms without system-bath coupling") {
  const double theta = 1.2;
  const Evolution ev(builtin_scenario("cmaybe:theta=1.2,sb=0"));
  for (double tau : {0.4, 2.0, 5.5}) {
    const ClosedForms cf = cmaybe_closed_forms(theta, tau);
    CHECK_THAT(time_averaged_norm(ev, "system", SchattenOrder(1.0), tau, tight()).lambda, WithinAbs(cf.lambda_s, 1e-9));
    CHECK_THAT(time_averaged_norm(ev, "memory", SchattenOrder(1.0), tau, tight()).lambda, WithinAbs(cf.lambda_m, 1e-9));
  }
}

TEST_CASE("time averages require positive tau") {
  const Evolution ev(builtin_scenario("cmaybe"));
  CHECK_THROWS_AS(time_averaged_norm(ev, "system", SchattenOrder(1.0), 0.0), ParameterError);
}

TEST_CASE("tightening the quadrature moves the averages by less than the tolerance") {
  const Evolution ev(builtin_scenario("werner_zx:lambda=0.8,phi=0.6"));
  QuadratureConfig loose;
  loose.abs_tol = 1e-8;
  const double a = time_averaged_norm(ev, "memory", SchattenOrder(2.0), 3.7, loose).lambda;
  const double b = time_averaged_norm(ev, "memory", SchattenOrder(2.0), 3.7, tight()).lambda;
  CHECK(std::abs(a - b) < 1e-8);
}

TEST_CASE("Schatten distances decrease with p") {
  const Evolution ev(builtin_scenario("werner_xx:lambda=0.9,phi=0.2"));
  const DensityMatrix a = ev.reduced_state(1.7, LabelSet{"system", "memory"});
  const DensityMatrix b = ev.initial_marginal(LabelSet{"system", "memory"});
  const double d1 = schatten_distance(a, b, SchattenOrder(1.0));
  const double d2 = schatten_distance(a, b, SchattenOrder(2.0));
  const double d3 = schatten_distance(a, b, SchattenOrder(3.0));
  const double dinf = schatten_distance(a, b, SchattenOrder::infinity());
  CHECK(d1 >= d2);
  CHECK(d2 >= d3);
  CHECK(d3 >= dinf);
  CHECK(dinf > 0.0);
}

TEST_CASE("frozen dynamics have no speed limit time") {
  Scenario s = builtin_scenario("cmaybe");
  s.bare_terms.clear();
  s.interaction_terms.clear();
  s.initial_wbar = tensor_product(maximally_mixed(SubsystemLayout::qubits({"bath"})), cmaybe_state(1.0));
  const Evolution ev(s);
  CHECK_FALSE(qsl_time(ev, "system", SchattenOrder(1.0), 1.0).has_value());
  const QtslReport r = qtsl_time(ev, SchattenOrder(1.0), 1.0);
  CHECK_FALSE(r.t_star.has_value());
  CHECK(r.t_star_b_star == 0.0);
}

TEST_CASE("reports at tau = 0") {
  const Evolution ev(builtin_scenario("cmaybe:theta=1.0"));
  const QtslReport r = qtsl_time(ev, SchattenOrder(1.0), 0.0);
  CHECK(r.t_star_b_star == 0.0);
  REQUIRE(r.t_star);
  CHECK(*r.t_star == 0.0);
  CHECK(r.lambda_s > 0.0);
  CHECK_THAT(r.fannes_margin, WithinAbs(fannes_constant(), 1e-13));
  CHECK_THAT(fannes_constant(), WithinAbs(2.0 / std::numbers::e, 1e-16));
}

TEST_CASE("weighted-time identity and bound margins") {
  for (const char* spec : {"cmaybe:theta=2.0", "werner_zx:lambda=0.5,phi=1.1", "werner_xx:lambda=0.6,phi=0.9"}) {
    INFO(spec);
    const Evolution ev(builtin_scenario(spec));
    for (double p : {1.0, 2.0}) {
      for (double tau : {0.5, 2.5}) {
        const QtslReport r = qtsl_time(ev, SchattenOrder(p), tau);
        CHECK(r.identity_residual < 1e-10);
        CHECK(r.fannes_margin >= 0.0);
        CHECK(r.dynamical_landauer_margin >= 0.0);
        CHECK(r.hypothesis_margin >= 0.0);
        REQUIRE(r.t_star);
        CHECK_THAT(*r.t_star * r.b_star, WithinAbs(r.t_star_b_star, 1e-10));
      }
    }
  }
}

TEST_CASE("bekenstein bound is the dimension-weighted lambda star") {
  const Evolution ev(builtin_scenario("cmaybe:theta=1.0"));
  const QtslReport r = qtsl_time(ev, SchattenOrder(2.0), 1.5);
  CHECK_THAT(bekenstein_bound(ev, SchattenOrder(2.0), 1.5), WithinAbs(std::log(4.0) * 2.0 * r.lambda_star, 1e-9));
}

TEST_CASE("margin classification") {
  CHECK_FALSE(classify_margin(0.1).flagged);
  CHECK_FALSE(classify_margin(0.0).violated);
  CHECK(classify_margin(-1e-12).flagged);
  CHECK_FALSE(classify_margin(-1e-12).violated);
  CHECK(classify_margin(-1e-6).violated);
}

TEST_CASE("support mismatch yields an infinite Stein exponent") {
  const Scenario s = load_scenario(std::string(AUTOTHERM_SCENARIO_DIR) + "/support_mismatch.scn");
  const Evolution ev(s);
  const HypothesisTest h = hypothesis_testing_bound(ev, SchattenOrder(1.0), 0.7);
  CHECK(h.infinite_exponent);
  CHECK(std::isinf(h.stein_exponent));
  CHECK_FALSE(fannes_audit(ev, SchattenOrder(1.0), 0.7).violated);
}
