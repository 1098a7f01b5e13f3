// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include "autotherm/catalysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "autotherm/errors.hpp"
#include "json.hpp"

namespace autotherm {
namespace {

const std::string kWorkLabel(labels::kWork);

void require_work_state(const CompositeOperator& h, const DensityMatrix& rho_w) {
  if (!h.layout().contains(kWorkLabel)) throw LayoutError("catalysis checks need a work factor");
  if (rho_w.layout().size() != 1 || rho_w.layout().labels().front() != kWorkLabel ||
      rho_w.layout().total_dim() != h.layout().dim_of(kWorkLabel)) {
    throw LayoutError("rho_w must be a state of the work factor alone");
  }
}

CompositeOperator pt_wbar(const CompositeOperator& op) { return partial_transpose(op, wbar_labels(op.layout())); }

}  // namespace

double check_pt_unitarity(const CompositeOperator& u) {
  const double input = u.unitarity_residual();
  if (input > tol::kUnitaryInput) {
    throw ContractError("check_pt_unitarity: input is not unitary (residual " + std::to_string(input) + ")");
  }
  return pt_wbar(u).unitarity_residual();
}

double check_state_compatibility(const CompositeOperator& h_total, const DensityMatrix& rho_w) {
  require_work_state(h_total, rho_w);
  const CompositeOperator lifted = embed(rho_w.matrix(), {kWorkLabel}, h_total.layout());
  return spectral_norm(commutator(h_total.matrix(), lifted.matrix()));
}

SchmidtStructure check_schmidt_structure(const CompositeOperator& h_total, const DensityMatrix& rho_w) {
  require_work_state(h_total, rho_w);
  const std::vector<SchmidtTerm> terms = operator_schmidt(h_total, wbar_labels(h_total.layout()), {kWorkLabel});
  std::vector<Matrix> a;
  std::vector<Matrix> b;
  for (const auto& t : terms) {
    const double scale = spectral_norm(t.right);
    a.push_back(t.weight * scale * t.left);
    b.push_back(t.right / scale);
  }
  SchmidtStructure out;
  out.terms = terms.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      out.schmidt_commutator_residual = std::max(out.schmidt_commutator_residual, spectral_norm(commutator(a[i], a[j])));
    }
    out.work_factor_residual = std::max(out.work_factor_residual, spectral_norm(commutator(b[i], rho_w.matrix())));
  }
  return out;
}

std::vector<double> check_power_multiplicativity(const CompositeOperator& h_total, int n_max) {
  if (n_max < 2) throw ParameterError("check_power_multiplicativity: n_max must be >= 2");
  const Matrix h_pt = pt_wbar(h_total).matrix();
  Matrix power = h_total.matrix();
  Matrix pt_power = h_pt;
  std::vector<double> out;
  for (int n = 2; n <= n_max; ++n) {
    power = power * h_total.matrix();
    pt_power = pt_power * h_pt;
    out.push_back(spectral_norm(pt_wbar(CompositeOperator(h_total.layout(), power)).matrix() - pt_power));
  }
  return out;
}

double check_unitality(const Evolution& evolution, double tau) {
  const SubsystemLayout wbar = evolution.scenario().initial_wbar.layout();
  const DensityMatrix mixed = maximally_mixed(wbar);
  const DensityMatrix image = evolution.wbar_channel(mixed, tau);
  return hermitian_schatten_norm(image.matrix() - mixed.matrix(), SchattenOrder(1.0));
}

double check_unitality(const Scenario& scenario, double tau) { return check_unitality(Evolution(scenario), tau); }

double check_work_entropy(const Evolution& evolution, double tau) {
  const DensityMatrix final_work = evolution.reduced_state(tau, labels::kWork);
  return std::abs(von_neumann_entropy(final_work).nats - von_neumann_entropy(evolution.scenario().initial_work).nats);
}

double check_work_entropy(const Scenario& scenario, double tau) { return check_work_entropy(Evolution(scenario), tau); }

// ---------------------------------------------------------------- report

bool CatalysisReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

std::vector<std::string> CatalysisReport::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.pass) out.push_back(c.name);
  }
  return out;
}

std::string CatalysisReport::to_json() const {
  nlohmann::ordered_json j;
  j["scenario"] = scenario;
  j["tau"] = tau;
  j["pt_unitarity_residual"] = pt_unitarity_residual;
  j["state_compatibility_residual"] = state_compatibility_residual;
  j["schmidt_commutator_residual"] = schmidt_commutator_residual;
  j["work_factor_residual"] = work_factor_residual;
  j["power_residuals"] = power_residuals;
  j["unitality_residual"] = unitality_residual;
  j["work_entropy_drift"] = work_entropy_drift;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    list.push_back({{"name", c.name},
                    {"kind", c.kind == CheckKind::kStructural ? "structural" : "dynamical"},
                    {"residual", c.residual},
                    {"threshold", c.threshold},
                    {"pass", c.pass}});
  }
  j["checks"] = std::move(list);
  j["verdict"] = all_pass() ? "pass" : "fail";
  return j.dump(2);
}

void CatalysisReport::write_text(std::ostream& os) const {
  char line[160];
  std::snprintf(line, sizeof line, "catalysis report: %s at tau = %.17g\n", scenario.c_str(), tau);
  os << line;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "  %-4s %-26s %-10s residual %.3e  threshold %.1e\n", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), c.kind == CheckKind::kStructural ? "structural" : "dynamical", c.residual,
                  c.threshold);
    os << line;
  }
  os << "verdict: " << (all_pass() ? "pass" : "fail") << '\n';
}

CatalysisReport verify(const Evolution& evolution, double tau, int n_max, double threshold) {
  const Scenario& s = evolution.scenario();
  const CompositeOperator& h = evolution.hamiltonians().h_total;
  CatalysisReport r;
  r.scenario = s.name;
  r.tau = tau;
  r.state_compatibility_residual = check_state_compatibility(h, s.initial_work);
  const SchmidtStructure schmidt = check_schmidt_structure(h, s.initial_work);
  r.schmidt_commutator_residual = schmidt.schmidt_commutator_residual;
  r.work_factor_residual = schmidt.work_factor_residual;
  r.power_residuals = check_power_multiplicativity(h, n_max);
  r.pt_unitarity_residual = check_pt_unitarity(evolution.unitary(tau));
  r.unitality_residual = check_unitality(evolution, tau);
  r.work_entropy_drift = check_work_entropy(evolution, tau);

  const auto add = [&](std::string name, double residual, CheckKind kind) {
    r.checks.push_back({std::move(name), residual, threshold, residual <= threshold, kind});
  };
  add("state_compatibility", r.state_compatibility_residual, CheckKind::kStructural);
  add("schmidt_commutator", r.schmidt_commutator_residual, CheckKind::kStructural);
  add("work_factor_commutator", r.work_factor_residual, CheckKind::kStructural);
  for (std::size_t k = 0; k < r.power_residuals.size(); ++k) {
    add("power_multiplicativity_n" + std::to_string(k + 2), r.power_residuals[k], CheckKind::kStructural);
  }
  add("pt_unitarity", r.pt_unitarity_residual, CheckKind::kDynamical);
  add("unitality", r.unitality_residual, CheckKind::kDynamical);
  add("work_entropy", r.work_entropy_drift, CheckKind::kDynamical);
  return r;
}

CatalysisReport verify(const Scenario& scenario, double tau, int n_max, double threshold) {
  return verify(Evolution(scenario), tau, n_max, threshold);
}

}  // namespace autotherm
