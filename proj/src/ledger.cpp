// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include "autotherm/ledger.hpp"

#include <cmath>
#include <ostream>

#include "autotherm/csv.hpp"

namespace autotherm {
namespace {

const std::string kB(labels::kBath);
const std::string kS(labels::kSystem);
const std::string kM(labels::kMemory);
const std::string kW(labels::kWork);

/// Everything the ledger needs at one time, computed from a single rho(tau).
struct Snapshot {
  DensityMatrix rho;
  DensityMatrix bath, system, memory, work;

  Snapshot(const Evolution& ev, double tau)
      : rho(ev.total_state(tau)),
        bath(partial_trace(rho, {kB})),
        system(partial_trace(rho, {kS})),
        memory(partial_trace(rho, {kM})),
        work(partial_trace(rho, {kW})) {}

  [[nodiscard]] DensityMatrix weak_coupling(const Evolution& ev) const {
    return tensor_product(tensor_product(tensor_product(ev.bath_equilibrium(), system), memory), work);
  }
};

double energy(const DensityMatrix& rho, const CompositeOperator& h) { return (rho.matrix() * h.matrix()).trace().real(); }

double entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho).nats; }

const CompositeOperator& local_h(const Evolution& ev, const std::string& label) {
  return ev.hamiltonians().local_bare.at(label);
}

}  // namespace

double heat(const Evolution& ev, double tau) {
  const DensityMatrix e_b = ev.reduced_state(tau, kB);
  return energy(ev.bath_equilibrium(), local_h(ev, kB)) - energy(e_b, local_h(ev, kB));
}

double work(const Evolution& ev, double tau) {
  const DensityMatrix e_w = ev.reduced_state(tau, kW);
  return energy(ev.scenario().initial_work, local_h(ev, kW)) - energy(e_w, local_h(ev, kW));
}

double internal_energy_change(const Evolution& ev, double tau) {
  const DensityMatrix e_s = ev.reduced_state(tau, kS);
  return energy(e_s, local_h(ev, kS)) - energy(ev.initial_marginal(kS), local_h(ev, kS));
}

double memory_energy_change(const Evolution& ev, double tau) {
  const DensityMatrix e_m = ev.reduced_state(tau, kM);
  return energy(ev.initial_marginal(kM), local_h(ev, kM)) - energy(e_m, local_h(ev, kM));
}

FirstLaw first_law_residual(const Evolution& ev, double tau) {
  const ThermoLedger l = compute_ledger(ev, tau);
  return FirstLaw{l.first_law_residual, l.energy_conservation_residual, l.energy_flag};
}

EntropyChanges entropy_changes(const Evolution& ev, double tau) { return compute_ledger(ev, tau).entropy; }

SecondLaw second_law(const Evolution& ev, double tau) {
  const Snapshot now(ev, tau);
  const RelativeEntropy initial = relative_entropy_detail(ev.initial_state(), ev.weak_coupling_reference(0.0));
  const RelativeEntropy final = relative_entropy_detail(now.rho, now.weak_coupling(ev));

  SecondLaw out;
  const double q = energy(ev.bath_equilibrium(), local_h(ev, kB)) - energy(now.bath, local_h(ev, kB));
  out.decomposed = (entropy(now.system) - entropy(ev.initial_marginal(kS))) +
                   (entropy(now.memory) - entropy(ev.initial_marginal(kM))) - ev.scenario().beta * q;
  out.kernel_mass_initial = initial.kernel_mass;
  out.kernel_mass_final = final.kernel_mass;
  if (!initial.finite()) {
    out.support_failure = "rho_tot(0) has mass " + csv::format(initial.kernel_mass) + " outside supp sigma_tot(0)";
  } else if (!final.finite()) {
    out.support_failure = "rho_tot(tau) has mass " + csv::format(final.kernel_mass) + " outside supp sigma_tot(tau)";
  } else {
    out.delta_rel = final.value - initial.value;
    out.residual = std::abs(out.decomposed - *out.delta_rel);
  }
  return out;
}

LandauerQuantities landauer_quantities(const Evolution& ev, double tau) {
  const ThermoLedger l = compute_ledger(ev, tau);
  return LandauerQuantities{l.q_eff, l.landauer_gap, l.bound_margin};
}

double initial_mutual_information(const Evolution& ev) {
  return entropy(ev.initial_marginal(kB)) + entropy(ev.initial_marginal(kS)) + entropy(ev.initial_marginal(kM)) -
         entropy(ev.scenario().initial_wbar);
}

ThermoLedger compute_ledger(const Evolution& ev, double tau) {
  const Snapshot now(ev, tau);
  const double beta = ev.scenario().beta;
  const DensityMatrix rho_s = ev.initial_marginal(kS);
  const DensityMatrix rho_m = ev.initial_marginal(kM);
  const DensityMatrix& rho_w = ev.scenario().initial_work;

  ThermoLedger l;
  l.tau = tau;
  l.heat = energy(ev.bath_equilibrium(), local_h(ev, kB)) - energy(now.bath, local_h(ev, kB));
  l.work = energy(rho_w, local_h(ev, kW)) - energy(now.work, local_h(ev, kW));
  l.internal_energy_change = energy(now.system, local_h(ev, kS)) - energy(rho_s, local_h(ev, kS));
  l.memory_energy_residual = std::abs(energy(rho_m, local_h(ev, kM)) - energy(now.memory, local_h(ev, kM)));
  l.first_law_residual = std::abs(l.internal_energy_change - l.heat - l.work);
  l.energy_conservation_residual = check_energy_conservation(ev.hamiltonians());
  l.energy_flag = l.energy_conservation_residual > tol::kEnergyConservation;

  l.entropy.system = entropy(now.system) - entropy(rho_s);
  l.entropy.memory = entropy(now.memory) - entropy(rho_m);
  l.entropy.work = entropy(now.work) - entropy(rho_w);
  l.mi0 = initial_mutual_information(ev);

  const double decomposed = l.entropy.system + l.entropy.memory - beta * l.heat;
  const RelativeEntropy initial = relative_entropy_detail(ev.initial_state(), ev.weak_coupling_reference(0.0));
  const RelativeEntropy final = relative_entropy_detail(now.rho, now.weak_coupling(ev));
  l.relative_entropy_initial = initial.value;
  l.relative_entropy_final = final.value;

  // the initial relative entropy equals mi0 by definition; fall back to it
  // when the direct evaluation loses support
  const double initial_value = initial.finite() ? initial.value : l.mi0;
  l.q_eff = l.heat - initial_value / beta;
  l.bound_margin = l.entropy.system + l.entropy.memory - beta * l.q_eff;

  if (initial.finite() && final.finite()) {
    l.delta_rel = final.value - initial.value;
    l.delta_rel_direct = true;
    l.second_law_residual = std::abs(decomposed - l.delta_rel);
    l.landauer_gap = l.bound_margin - final.value;
  } else {
    l.delta_rel = decomposed;
    l.delta_rel_direct = false;
    l.support_failure = !initial.finite() ? "initial" : "final";
  }
  return l;
}

std::vector<std::string> ledger_csv_columns() {
  return {"tau",    "Q",        "W",
          "dE",     "dS_s",     "dS_m",
          "dS_w",   "delta_rel", "Q_eff",
          "gap",    "margin",   "mi0",
          "first_law_residual", "second_law_residual", "memory_energy_residual",
          "energy_conservation_residual", "energy_flag", "delta_rel_direct"};
}

void write_ledger_row(std::ostream& os, const ThermoLedger& l) {
  csv::Row row;
  row.add(l.tau)
      .add(l.heat)
      .add(l.work)
      .add(l.internal_energy_change)
      .add(l.entropy.system)
      .add(l.entropy.memory)
      .add(l.entropy.work)
      .add(l.delta_rel)
      .add(l.q_eff)
      .add(l.landauer_gap)
      .add(l.bound_margin)
      .add(l.mi0)
      .add(l.first_law_residual)
      .add(l.second_law_residual)
      .add(l.memory_energy_residual)
      .add(l.energy_conservation_residual)
      .add(l.energy_flag)
      .add(l.delta_rel_direct);
  row.write(os);
}

}  // namespace autotherm
