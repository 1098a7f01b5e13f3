// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include "autotherm/hamiltonian.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>

#include "autotherm/errors.hpp"

namespace autotherm {

Matrix pauli_matrix(Pauli p) {
  Matrix m(2, 2);
  switch (p) {
    case Pauli::kI: m << 1, 0, 0, 1; break;
    case Pauli::kX: m << 0, 1, 1, 0; break;
    case Pauli::kY: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case Pauli::kZ: m << 1, 0, 0, -1; break;
  }
  return m;
}

char pauli_letter(Pauli p) {
  switch (p) {
    case Pauli::kI: return 'I';
    case Pauli::kX: return 'X';
    case Pauli::kY: return 'Y';
    case Pauli::kZ: return 'Z';
  }
  return '?';
}

LabelSet term_labels(const HamiltonianTerm& term) {
  if (const auto* p = std::get_if<PauliTerm>(&term)) {
    LabelSet out;
    for (const auto& [label, _] : p->factors) out.push_back(label);
    return out;
  }
  return std::get<DenseTerm>(term).labels;
}

CompositeOperator realize(const HamiltonianTerm& term, const SubsystemLayout& layout) {
  if (const auto* p = std::get_if<PauliTerm>(&term)) {
    for (const auto& [label, _] : p->factors) {
      if (layout.dim_of(label) != 2) throw ScenarioError("Pauli factor on non-qubit subsystem '" + label + "'");
    }
    Matrix m = Matrix::Identity(1, 1);
    for (const auto& entry : layout.entries()) {
      const auto it = p->factors.find(entry.label);
      const auto d = static_cast<Eigen::Index>(entry.dim);
      m = kron(m, it == p->factors.end() ? Matrix(Matrix::Identity(d, d)) : pauli_matrix(it->second));
    }
    return CompositeOperator(layout, p->coefficient * m);
  }
  const auto& dense = std::get<DenseTerm>(term);
  return embed(dense.coefficient * dense.block, dense.labels, layout);
}

LabelSet wbar_labels(const SubsystemLayout& layout) { return layout.complement({std::string(labels::kWork)}).labels(); }

namespace {

constexpr std::string_view kCanonical[] = {labels::kBath, labels::kSystem, labels::kMemory, labels::kWork};

void validate_term(const HamiltonianTerm& term, const SubsystemLayout& layout, bool bare) {
  const LabelSet names = term_labels(term);
  std::set<std::string> unique(names.begin(), names.end());
  if (unique.size() != names.size()) throw ScenarioError("term lists a subsystem twice");
  for (const auto& n : names) {
    if (!layout.contains(n)) throw ScenarioError("term references unknown subsystem '" + n + "'");
  }
  if (bare && names.size() != 1) throw ScenarioError("bare term must act on exactly one subsystem");
  if (!bare && names.empty()) throw ScenarioError("interaction term acts on no subsystem");

  if (const auto* p = std::get_if<PauliTerm>(&term)) {
    if (!std::isfinite(p->coefficient)) throw ScenarioError("non-finite term coefficient");
    for (const auto& [label, _] : p->factors) {
      if (layout.dim_of(label) != 2) throw ScenarioError("Pauli factor on non-qubit subsystem '" + label + "'");
    }
    return;
  }
  const auto& dense = std::get<DenseTerm>(term);
  if (!std::isfinite(dense.coefficient)) throw ScenarioError("non-finite term coefficient");
  std::size_t d = 1;
  for (const auto& n : names) d *= layout.dim_of(n);
  if (dense.block.rows() != static_cast<Eigen::Index>(d) || dense.block.cols() != static_cast<Eigen::Index>(d)) {
    throw ScenarioError("dense block dimension does not match its subsystems");
  }
  const double residual = spectral_norm(dense.block - dense.block.adjoint());
  if (residual > 1e-12 * std::max(1.0, spectral_norm(dense.block))) {
    std::ostringstream msg;
    msg << "non-Hermitian dense block (residual " << residual << ")";
    throw ScenarioError(msg.str());
  }
}

CompositeOperator local_bare_hamiltonian(const Scenario& s, const std::string& label) {
  const SubsystemLayout local = s.layout.restricted_to({label});
  CompositeOperator h = CompositeOperator::zero(local);
  for (const auto& term : s.bare_terms) {
    if (term_labels(term).front() == label) h += realize(term, local);
  }
  return h;
}

double memory_deviation(const CompositeOperator& h_m) {
  const double c = h_m.trace().real() / static_cast<double>(h_m.dim());
  const auto d = static_cast<Eigen::Index>(h_m.dim());
  return spectral_norm(h_m.matrix() - c * Matrix::Identity(d, d));
}

}  // namespace

ScenarioDiagnostics validate_scenario(const Scenario& s) {
  const auto& entries = s.layout.entries();
  if (entries.size() != 4) throw ScenarioError("layout must list bath, system, memory, work");
  for (std::size_t i = 0; i < 4; ++i) {
    if (entries[i].label != kCanonical[i]) {
      throw ScenarioError("layout entry " + std::to_string(i) + " must be '" + std::string(kCanonical[i]) +
                          "', found '" + entries[i].label + "'");
    }
  }
  if (!(s.beta > 0.0) || !std::isfinite(s.beta)) throw ScenarioError("beta must be positive and finite");
  for (const auto& t : s.bare_terms) validate_term(t, s.layout, true);
  for (const auto& t : s.interaction_terms) validate_term(t, s.layout, false);

  const SubsystemLayout wbar = s.layout.restricted_to(wbar_labels(s.layout));
  if (!(s.initial_wbar.layout() == wbar)) throw ScenarioError("initial w-bar state must live on bath, system, memory");
  if (!(s.initial_work.layout() == s.layout.restricted_to({std::string(labels::kWork)}))) {
    throw ScenarioError("initial work state must live on the work subsystem");
  }

  ScenarioDiagnostics diag;
  const std::string bath(labels::kBath);
  const DensityMatrix gibbs = gibbs_state(local_bare_hamiltonian(s, bath), s.beta);
  const DensityMatrix bath_marginal = partial_trace(s.initial_wbar, {bath});
  diag.bath_marginal_deviation = spectral_norm(bath_marginal.matrix() - gibbs.matrix());
  if (diag.bath_marginal_deviation > tol::kMarginal) {
    std::ostringstream msg;
    msg << "bath marginal differs from the Gibbs state of H_b at beta=" << s.beta << " by "
        << diag.bath_marginal_deviation;
    throw ScenarioError(msg.str());
  }
  diag.memory_identity_deviation = memory_deviation(local_bare_hamiltonian(s, std::string(labels::kMemory)));
  if (diag.memory_identity_deviation > tol::kIdealMemory) {
    std::ostringstream msg;
    msg << "memory Hamiltonian is not proportional to the identity (deviation " << diag.memory_identity_deviation
        << ")";
    diag.warnings.push_back(msg.str());
  }
  return diag;
}

BuiltHamiltonians build(const Scenario& s) {
  validate_scenario(s);
  BuiltHamiltonians out{CompositeOperator::zero(s.layout), CompositeOperator::zero(s.layout), {}, {}};
  for (const auto& entry : s.layout.entries()) {
    out.parts.emplace("bare:" + entry.label, CompositeOperator::zero(s.layout));
    out.local_bare.emplace(entry.label, local_bare_hamiltonian(s, entry.label));
  }
  for (const auto& term : s.bare_terms) {
    const CompositeOperator h = realize(term, s.layout);
    out.parts.at("bare:" + term_labels(term).front()) += h;
    out.h_bare += h;
  }
  out.h_total = out.h_bare;
  for (const auto& term : s.interaction_terms) {
    const CompositeOperator h = realize(term, s.layout);
    const SubsystemLayout support = s.layout.restricted_to(term_labels(term));
    std::string key = "int:";
    for (const auto& e : support.entries()) key += (key.size() > 4 ? "," : "") + e.label;
    auto [it, inserted] = out.parts.try_emplace(key, h);
    if (!inserted) it->second += h;
    out.h_total += h;
  }
  return out;
}

double check_energy_conservation(const BuiltHamiltonians& built) {
  return spectral_norm(commutator(built.h_total.matrix(), built.h_bare.matrix()));
}

IdealMemoryCheck check_ideal_memory(const BuiltHamiltonians& built) {
  IdealMemoryCheck out;
  out.deviation = memory_deviation(built.local_bare.at(std::string(labels::kMemory)));
  out.ideal = out.deviation <= tol::kIdealMemory;
  return out;
}

// ---------------------------------------------------------------- built-ins

namespace {

PauliTerm pauli(double c, std::initializer_list<std::pair<std::string_view, Pauli>> factors) {
  PauliTerm t;
  t.coefficient = c;
  for (const auto& [label, p] : factors) t.factors.emplace(std::string(label), p);
  return t;
}

SubsystemLayout four_qubits() {
  return SubsystemLayout::qubits({labels::kBath, labels::kSystem, labels::kMemory, labels::kWork});
}

DensityMatrix bath_gibbs_unit() {
  const SubsystemLayout bath = SubsystemLayout::qubits({labels::kBath});
  return gibbs_state(CompositeOperator(bath, pauli_matrix(Pauli::kZ)), 1.0);
}

DensityMatrix excited_work() {
  const std::vector<Complex> amps{0.0, 1.0};
  return pure_state_from_amplitudes(amps, SubsystemLayout::qubits({labels::kWork}));
}

}  // namespace

Scenario builtin_scenario(BuiltinFamily family, const BuiltinParams& params) {
  using labels::kBath, labels::kSystem, labels::kMemory, labels::kWork;
  if (family == BuiltinFamily::kSwapCounterexample) {
    const std::vector<double> p_s{0.8, 0.2};
    const DensityMatrix rho_sm = tensor_product(diagonal_state(p_s, SubsystemLayout::qubits({kSystem})),
                                                maximally_mixed(SubsystemLayout::qubits({kMemory})));
    return Scenario{
        "swap_counterexample",
        four_qubits(),
        1.0,
        {pauli(1.0, {{kBath, Pauli::kZ}}), pauli(1.0, {{kMemory, Pauli::kI}})},
        {pauli(1.0, {{kSystem, Pauli::kX}, {kWork, Pauli::kX}}),
         pauli(1.0, {{kSystem, Pauli::kY}, {kWork, Pauli::kY}}),
         pauli(1.0, {{kSystem, Pauli::kZ}, {kWork, Pauli::kZ}})},
        tensor_product(bath_gibbs_unit(), rho_sm),
        excited_work(),
    };
  }

  std::string name;
  std::optional<DensityMatrix> rho_sm;
  switch (family) {
    case BuiltinFamily::kCMaybe:
      name = "cmaybe";
      rho_sm = cmaybe_state(params.theta);
      break;
    case BuiltinFamily::kWernerZX:
      name = "werner_zx";
      rho_sm = werner_like_state(params.lambda, params.phi, WernerBasis::kZX);
      break;
    default:
      name = "werner_xx";
      rho_sm = werner_like_state(params.lambda, params.phi, WernerBasis::kXX);
      break;
  }
  return Scenario{
      name,
      four_qubits(),
      1.0,
      {pauli(1.0, {{kSystem, Pauli::kZ}}), pauli(1.0, {{kBath, Pauli::kZ}}), pauli(1.0, {{kMemory, Pauli::kI}}),
       pauli(1.0, {{kWork, Pauli::kZ}})},
      {pauli(1.0, {{kSystem, Pauli::kZ}, {kWork, Pauli::kZ}}), pauli(1.0, {{kSystem, Pauli::kZ}, {kMemory, Pauli::kZ}}),
       pauli(params.system_bath_coupling, {{kBath, Pauli::kZ}, {kSystem, Pauli::kZ}}),
       pauli(1.0, {{kBath, Pauli::kZ}, {kMemory, Pauli::kZ}})},
      tensor_product(bath_gibbs_unit(), *rho_sm),
      excited_work(),
  };
}

BuiltinFamily parse_builtin_family(std::string_view name) {
  if (name == "cmaybe") return BuiltinFamily::kCMaybe;
  if (name == "werner_zx") return BuiltinFamily::kWernerZX;
  if (name == "werner_xx") return BuiltinFamily::kWernerXX;
  if (name == "swap" || name == "swap_counterexample") return BuiltinFamily::kSwapCounterexample;
  throw ParameterError("unknown built-in scenario family: " + std::string(name));
}

std::string_view builtin_family_name(BuiltinFamily family) {
  switch (family) {
    case BuiltinFamily::kCMaybe: return "cmaybe";
    case BuiltinFamily::kWernerZX: return "werner_zx";
    case BuiltinFamily::kWernerXX: return "werner_xx";
    case BuiltinFamily::kSwapCounterexample: return "swap_counterexample";
  }
  return "?";
}

void set_builtin_param(BuiltinParams& params, std::string_view key, double value) {
  if (key == "theta") {
    params.theta = value;
  } else if (key == "lambda") {
    params.lambda = value;
  } else if (key == "phi") {
    params.phi = value;
  } else if (key == "sb") {
    params.system_bath_coupling = value;
  } else {
    throw ParameterError("unknown built-in parameter: " + std::string(key));
  }
}

BuiltinSpec parse_builtin_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  BuiltinSpec out{parse_builtin_family(spec.substr(0, colon)), {}};
  if (colon == std::string_view::npos) return out;
  std::string_view rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParameterError("expected key=value in built-in spec: " + std::string(item));
    const std::string_view text = item.substr(eq + 1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ParameterError("invalid number in built-in spec: " + std::string(text));
    }
    set_builtin_param(out.params, item.substr(0, eq), value);
  }
  return out;
}

Scenario builtin_scenario(std::string_view spec) {
  const BuiltinSpec parsed = parse_builtin_spec(spec);
  return builtin_scenario(parsed.family, parsed.params);
}

}  // namespace autotherm
