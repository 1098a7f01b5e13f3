// Copyright 2026 The autotherm Authors
// SPDX-License-Identifier: Apache-2.0

#include "autotherm/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "autotherm/catalysis.hpp"
#include "autotherm/csv.hpp"
#include "autotherm/dynamics.hpp"
#include "autotherm/errors.hpp"
#include "autotherm/ledger.hpp"
#include "autotherm/oracles.hpp"
#include "autotherm/parallel.hpp"
#include "autotherm/scenario_io.hpp"
#include "autotherm/speed_limits.hpp"

namespace autotherm::cli {
namespace {

double parse_number(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParameterError("invalid number: '" + std::string(text) + "'");
  }
  return value;
}

/// A named grid from "name=<grid>".
struct NamedGrid {
  std::string name;
  std::vector<double> values;
};

NamedGrid parse_named_grid(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) throw ParameterError("expected name=grid, got '" + std::string(text) + "'");
  return {std::string(text.substr(0, eq)), parse_grid(text.substr(eq + 1))};
}

/// Writes to --out when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParameterError("cannot open output file: " + path);
      stream_ = &file_;
    }
  }
  [[nodiscard]] std::ostream& stream() { return *stream_; }
  [[nodiscard]] bool to_file() const { return stream_ == &file_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::vector<double> tau_values(const std::optional<double>& tau, const std::string& tau_grid) {
  if (tau && !tau_grid.empty()) throw ParameterError("give either --tau or --tau-grid, not both");
  if (tau) return {*tau};
  if (tau_grid.empty()) throw ParameterError("one of --tau or --tau-grid is required");
  return parse_grid(tau_grid);
}

void require_nonnegative(const std::vector<double>& taus) {
  for (double t : taus) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw ParameterError("tau values must be finite and >= 0");
  }
}

QuadratureConfig quadrature(const std::optional<double>& quad_tol) {
  QuadratureConfig q;
  if (quad_tol) {
    if (!(*quad_tol > 0.0)) throw ParameterError("--quad-tol must be positive");
    q.abs_tol = *quad_tol;
  }
  return q;
}

/// Every combination of grid values, first grid slowest.
std::vector<std::vector<double>> cartesian(const std::vector<NamedGrid>& grids) {
  std::vector<std::vector<double>> points{{}};
  for (const auto& g : grids) {
    std::vector<std::vector<double>> next;
    for (const auto& p : points) {
      for (double v : g.values) {
        next.push_back(p);
        next.back().push_back(v);
      }
    }
    points = std::move(next);
  }
  return points;
}

std::string status_of(const AuditMargin& m) {
  if (m.violated) return "violated";
  return m.flagged ? "flagged" : "ok";
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string scenario;
  double tau = 0.0;
  int n_max = 4;
  std::string format = "report";
  std::string out;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const Evolution ev(resolve_scenario(o.scenario));
  const CatalysisReport report = verify(ev, o.tau, o.n_max);
  std::ostringstream text;
  if (o.format == "json") {
    text << report.to_json() << '\n';
  } else if (o.format == "csv") {
    csv::write_header(text, {"check", "kind", "residual", "threshold", "pass"});
    for (const auto& c : report.checks) {
      csv::Row row;
      row.add(c.name).add(c.kind == CheckKind::kStructural ? "structural" : "dynamical");
      row.add(c.residual).add(c.threshold).add(c.pass).write(text);
    }
  } else {
    report.write_text(text);
  }
  out << text.str();
  if (!o.out.empty()) {
    Sink sink(o.out, out);
    sink.stream() << text.str();
  }
  return report.all_pass() ? kOk : kPhysicsFailure;
}

// ---------------------------------------------------------------- evolve

struct EvolveOptions {
  std::string scenario;
  std::optional<double> tau;
  std::string tau_grid;
  std::string out;
  std::string trajectory;
};

int cmd_evolve(const EvolveOptions& o, std::ostream& out) {
  const std::vector<double> taus = tau_values(o.tau, o.tau_grid);
  require_nonnegative(taus);
  const Evolution ev(resolve_scenario(o.scenario));
  std::vector<ThermoLedger> rows(taus.size());
  parallel_for(taus.size(), [&](std::size_t i) { rows[i] = compute_ledger(ev, taus[i]); });

  Sink sink(o.out, out);
  csv::write_header(sink.stream(), ledger_csv_columns());
  for (const auto& l : rows) write_ledger_row(sink.stream(), l);

  if (!o.trajectory.empty()) {
    std::vector<double> sorted = taus;
    std::sort(sorted.begin(), sorted.end());
    const Trajectory traj =
        sample_trajectory(ev, sorted, {std::string(labels::kSystem), std::string(labels::kMemory),
                                       std::string(labels::kWork), std::string(labels::kBath)});
    Sink traj_sink(o.trajectory, out);
    write_trajectory_csv(traj_sink.stream(), traj);
  }
  return kOk;
}

// ---------------------------------------------------------------- qtsl-sweep

struct SweepOptions {
  std::string scenario;
  std::vector<std::string> grids;
  std::optional<double> tau;
  std::string tau_grid;
  std::string p = "1";
  std::optional<double> quad_tol;
  std::string out;
};

std::vector<std::string> sweep_columns(const std::vector<NamedGrid>& grids) {
  std::vector<std::string> cols;
  for (const auto& g : grids) cols.push_back(g.name);
  for (const char* c : {"tau", "dist_s", "dist_m", "lambda_s", "lambda_m", "t_s", "t_m", "t_star", "t_star_over_tau",
                        "b_star", "lambda_star", "fannes_margin", "dynamical_landauer_margin", "hypothesis_margin",
                        "quad_error"}) {
    cols.emplace_back(c);
  }
  return cols;
}

void add_report(csv::Row& row, const QtslReport& r) {
  std::optional<double> ratio;
  if (r.t_star && r.tau > 0.0) ratio = *r.t_star / r.tau;
  row.add(r.tau).add(r.dist_s).add(r.dist_m).add(r.lambda_s).add(r.lambda_m).add(r.t_s).add(r.t_m).add(r.t_star);
  row.add(ratio).add(r.b_star).add(r.lambda_star).add(r.fannes_margin).add(r.dynamical_landauer_margin);
  row.add(r.hypothesis_margin).add(r.quadrature_error_estimate);
}

int cmd_qtsl_sweep(const SweepOptions& o, std::ostream& out) {
  const SchattenOrder p = parse_schatten_order(o.p);
  const QuadratureConfig quad = quadrature(o.quad_tol);
  const std::vector<double> taus = tau_values(o.tau, o.tau_grid);
  require_nonnegative(taus);
  std::vector<NamedGrid> grids;
  for (const auto& g : o.grids) grids.push_back(parse_named_grid(g));

  // one scenario per parameter point; file scenarios take no parameters
  std::vector<Scenario> scenarios;
  const std::vector<std::vector<double>> points = cartesian(grids);
  if (grids.empty()) {
    scenarios.push_back(resolve_scenario(o.scenario));
  } else {
    constexpr std::string_view kPrefix = "builtin:";
    if (!o.scenario.starts_with(kPrefix)) throw ParameterError("--grid needs a builtin:<family> scenario");
    const BuiltinSpec base = parse_builtin_spec(std::string_view(o.scenario).substr(kPrefix.size()));
    for (const auto& point : points) {
      BuiltinParams params = base.params;
      for (std::size_t k = 0; k < grids.size(); ++k) set_builtin_param(params, grids[k].name, point[k]);
      scenarios.push_back(builtin_scenario(base.family, params));
    }
  }

  std::vector<std::optional<Evolution>> evolutions(scenarios.size());
  parallel_for(scenarios.size(), [&](std::size_t i) { evolutions[i].emplace(scenarios[i]); });
  const std::size_t n = scenarios.size() * taus.size();
  std::vector<QtslReport> reports(n);
  parallel_for(n, [&](std::size_t i) { reports[i] = qtsl_time(*evolutions[i / taus.size()], p, taus[i % taus.size()], quad); });

  Sink sink(o.out, out);
  csv::write_header(sink.stream(), sweep_columns(grids));
  for (std::size_t i = 0; i < n; ++i) {
    csv::Row row;
    for (double v : points[i / taus.size()]) row.add(v);
    add_report(row, reports[i]);
    row.write(sink.stream());
  }
  return kOk;
}

// ---------------------------------------------------------------- bounds

struct BoundsOptions {
  std::string scenario;
  std::optional<double> tau;
  std::string tau_grid;
  std::string p = "1";
  std::optional<double> quad_tol;
  std::string format = "csv";
  std::string out;
};

int cmd_bounds(const BoundsOptions& o, std::ostream& out) {
  const SchattenOrder p = parse_schatten_order(o.p);
  const QuadratureConfig quad = quadrature(o.quad_tol);
  const std::vector<double> taus = tau_values(o.tau, o.tau_grid);
  require_nonnegative(taus);
  const Evolution ev(resolve_scenario(o.scenario));
  std::vector<QtslReport> reports(taus.size());
  parallel_for(taus.size(), [&](std::size_t i) { reports[i] = qtsl_time(ev, p, taus[i], quad); });

  bool violated = false;
  double min_fannes = std::numeric_limits<double>::infinity();
  double min_landauer = min_fannes;
  double min_hypothesis = min_fannes;
  std::size_t infinite = 0;
  std::ostringstream table;
  csv::write_header(table, {"tau", "fannes_margin", "fannes_status", "dynamical_landauer_margin",
                            "dynamical_landauer_status", "stein_exponent", "hypothesis_bound", "hypothesis_margin",
                            "hypothesis_status", "t_star", "b_star"});
  for (const auto& r : reports) {
    const AuditMargin fannes = classify_margin(r.fannes_margin);
    const bool inf_exponent = std::isinf(r.stein_exponent);
    const AuditMargin landauer = classify_margin(r.dynamical_landauer_margin);
    const AuditMargin hypothesis = classify_margin(r.hypothesis_margin);
    const std::string landauer_status = inf_exponent ? "infinite_exponent" : status_of(landauer);
    const std::string hypothesis_status = inf_exponent ? "infinite_exponent" : status_of(hypothesis);
    violated = violated || fannes.violated || (!inf_exponent && (landauer.violated || hypothesis.violated));
    min_fannes = std::min(min_fannes, r.fannes_margin);
    if (inf_exponent) {
      ++infinite;
    } else {
      min_landauer = std::min(min_landauer, r.dynamical_landauer_margin);
      min_hypothesis = std::min(min_hypothesis, r.hypothesis_margin);
    }
    csv::Row row;
    row.add(r.tau).add(r.fannes_margin).add(status_of(fannes)).add(r.dynamical_landauer_margin).add(landauer_status);
    row.add(r.stein_exponent).add(r.hypothesis_bound).add(r.hypothesis_margin).add(hypothesis_status);
    row.add(r.t_star).add(r.b_star).write(table);
  }

  Sink sink(o.out, out);
  if (o.format == "report") {
    std::ostream& s = sink.stream();
    s << "bound audit: " << ev.scenario().name << ", p = " << csv::format(p.value()) << ", " << taus.size()
      << " tau points\n";
    s << "  min fannes margin             " << csv::format(min_fannes) << '\n';
    s << "  min dynamical landauer margin " << csv::format(min_landauer) << '\n';
    s << "  min hypothesis margin         " << csv::format(min_hypothesis) << '\n';
    s << "  infinite stein exponents      " << infinite << '\n';
    s << "verdict: " << (violated ? "fail" : "pass") << '\n';
  } else {
    sink.stream() << table.str();
  }
  return violated ? kPhysicsFailure : kOk;
}

// ---------------------------------------------------------------- oracle-compare

struct OracleOptions {
  std::string family;
  std::vector<std::string> grids;
  std::string tau_grid;
  double sb = 0.0;
  double lambda = 1.0;
  std::optional<double> quad_tol;
  double tolerance = 1e-7;
  std::string out;
};

struct Comparison {
  double param = 0.0;
  double tau = 0.0;
  ClosedForms oracle;
  QtslReport numeric;
  /// relative T1 deviation; empty where the speed gate excludes the point
  std::optional<double> t1_rel;
};

int cmd_oracle_compare(const OracleOptions& o, std::ostream& out, std::ostream& err) {
  const BuiltinFamily family = parse_builtin_family(o.family);
  if (family == BuiltinFamily::kSwapCounterexample) throw ParameterError("no closed forms for " + o.family);
  const std::string param_name = family == BuiltinFamily::kCMaybe ? "theta" : "phi";
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  std::vector<double> params;
  if (o.grids.empty() && family == BuiltinFamily::kWernerXX) params = parse_grid("0.1:3.0:10");
  if (o.grids.empty() && family != BuiltinFamily::kWernerXX) {
    for (int k = 1; k <= 12; ++k) params.push_back(kTwoPi * k / 12.0);
  }
  for (const auto& g : o.grids) {
    const NamedGrid ng = parse_named_grid(g);
    if (ng.name != param_name) throw ParameterError(o.family + " sweeps '" + param_name + "', not '" + ng.name + "'");
    params = ng.values;
  }
  std::vector<double> taus;
  if (o.tau_grid.empty()) {
    for (int k = 1; k <= 12; ++k) taus.push_back(kTwoPi * k / 12.0);
  } else {
    taus = parse_grid(o.tau_grid);
  }
  for (double t : taus) {
    if (!(t > 0.0)) throw ParameterError("oracle-compare needs tau > 0");
  }

  std::vector<Evolution> evolutions;
  for (double v : params) {
    BuiltinParams bp;
    bp.system_bath_coupling = o.sb;
    bp.lambda = o.lambda;
    set_builtin_param(bp, param_name, v);
    evolutions.emplace_back(builtin_scenario(family, bp));
  }
  const QuadratureConfig quad = quadrature(o.quad_tol);
  const SchattenOrder p1(1.0);
  const double ln2 = std::log(2.0);
  std::vector<Comparison> rows(params.size() * taus.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    Comparison& c = rows[i];
    c.param = params[i / taus.size()];
    c.tau = taus[i % taus.size()];
    switch (family) {
      case BuiltinFamily::kCMaybe: c.oracle = cmaybe_closed_forms(c.param, c.tau); break;
      case BuiltinFamily::kWernerZX: c.oracle = werner_zx_closed_forms(c.param, c.tau, o.lambda); break;
      default: c.oracle = werner_xx_components(o.lambda, c.param, c.tau); break;
    }
    c.numeric = qtsl_time(evolutions[i / taus.size()], p1, c.tau, quad);
    const double speed = ln2 * (c.numeric.lambda_s + c.numeric.lambda_m);
    if (speed > 1e-6 && c.oracle.t1 && c.numeric.t_star) {
      c.t1_rel = t1_relative_deviation(*c.numeric.t_star, *c.oracle.t1);
    }
  });

  double max_dist = 0.0;
  double max_lambda = 0.0;
  double max_t1 = 0.0;
  Sink sink(o.out, out);
  csv::write_header(sink.stream(),
                    {param_name, "tau", "oracle_dist_s", "numeric_dist_s", "oracle_dist_m", "numeric_dist_m",
                     "oracle_lambda_s", "numeric_lambda_s", "oracle_lambda_m", "numeric_lambda_m", "oracle_t1",
                     "numeric_t1", "max_abs_dev_dist", "max_abs_dev_lambda", "rel_dev_t1"});
  for (const auto& c : rows) {
    const double dev_dist = std::max(std::abs(c.oracle.dist_s - c.numeric.dist_s), std::abs(c.oracle.dist_m - c.numeric.dist_m));
    const double dev_lambda =
        std::max(std::abs(c.oracle.lambda_s - c.numeric.lambda_s), std::abs(c.oracle.lambda_m - c.numeric.lambda_m));
    max_dist = std::max(max_dist, dev_dist);
    max_lambda = std::max(max_lambda, dev_lambda);
    if (c.t1_rel) max_t1 = std::max(max_t1, *c.t1_rel);
    csv::Row row;
    row.add(c.param).add(c.tau).add(c.oracle.dist_s).add(c.numeric.dist_s).add(c.oracle.dist_m).add(c.numeric.dist_m);
    row.add(c.oracle.lambda_s).add(c.numeric.lambda_s).add(c.oracle.lambda_m).add(c.numeric.lambda_m);
    row.add(c.oracle.t1).add(c.numeric.t_star).add(dev_dist).add(dev_lambda).add(c.t1_rel);
    row.write(sink.stream());
  }

  const double worst = std::max({max_dist, max_lambda, max_t1});
  std::ostream& summary = sink.to_file() ? out : err;
  summary << "oracle-compare " << o.family << ": " << rows.size() << " points, max_abs_dev_dist "
          << csv::format(max_dist) << ", max_abs_dev_lambda " << csv::format(max_lambda) << ", max_rel_dev_t1 "
          << csv::format(max_t1) << ", tolerance " << csv::format(o.tolerance) << '\n';
  return worst <= o.tolerance ? kOk : kPhysicsFailure;
}

void add_tau_options(CLI::App* sub, std::optional<double>& tau, std::string& tau_grid) {
  sub->add_option("--tau", tau, "Single evolution time");
  sub->add_option("--tau-grid", tau_grid, "Times as start:stop:count or a,b,c");
}

}  // namespace

std::vector<double> parse_grid(std::string_view text) {
  if (text.empty()) throw ParameterError("empty grid");
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t pos; (pos = text.find(':', start)) != std::string_view::npos; start = pos + 1) {
      parts.push_back(text.substr(start, pos - start));
    }
    parts.push_back(text.substr(start));
    if (parts.size() != 3) throw ParameterError("grid must be start:stop:count, got '" + std::string(text) + "'");
    const double a = parse_number(parts[0]);
    const double b = parse_number(parts[1]);
    const double count = parse_number(parts[2]);
    if (!(count >= 1.0) || count != std::floor(count)) throw ParameterError("grid count must be an integer >= 1");
    const auto n = static_cast<std::size_t>(count);
    for (std::size_t k = 0; k < n; ++k) {
      out.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(k) / static_cast<double>(n - 1));
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_number(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"autotherm: catalysis checks, thermodynamic ledgers and speed limits for autonomous four-qubit engines"};
  app.require_subcommand(1, 1);

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Check every catalysis constraint at one time");
  verify_cmd->add_option("--scenario", verify_opts.scenario, "Scenario file or builtin:<family>[:k=v,...]")->required();
  verify_cmd->add_option("--tau", verify_opts.tau, "Evolution time")->required();
  verify_cmd->add_option("--n-max", verify_opts.n_max, "Highest power in the multiplicativity check")
      ->check(CLI::Range(2, 64));
  verify_cmd->add_option("--format", verify_opts.format, "report, json or csv")
      ->check(CLI::IsMember({"report", "json", "csv"}));
  verify_cmd->add_option("--out", verify_opts.out, "Also write the report here");

  EvolveOptions evolve_opts;
  auto* evolve_cmd = app.add_subcommand("evolve", "Thermodynamic ledger over a time grid");
  evolve_cmd->add_option("--scenario", evolve_opts.scenario, "Scenario file or builtin:<family>[:k=v,...]")->required();
  add_tau_options(evolve_cmd, evolve_opts.tau, evolve_opts.tau_grid);
  evolve_cmd->add_option("--out", evolve_opts.out, "CSV destination (default stdout)");
  evolve_cmd->add_option("--trajectory", evolve_opts.trajectory, "Also write reduced-state trajectories here");
  std::string evolve_format = "csv";
  evolve_cmd->add_option("--format", evolve_format, "csv")->check(CLI::IsMember({"csv"}));

  SweepOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("qtsl-sweep", "QTSL report over parameter and time grids");
  sweep_cmd->add_option("--scenario", sweep_opts.scenario, "Scenario file or builtin:<family>[:k=v,...]")->required();
  sweep_cmd->add_option("--grid", sweep_opts.grids, "Built-in parameter grid name=start:stop:count (repeatable)");
  add_tau_options(sweep_cmd, sweep_opts.tau, sweep_opts.tau_grid);
  sweep_cmd->add_option("--p", sweep_opts.p, "Schatten order (number >= 1 or inf)");
  sweep_cmd->add_option("--quad-tol", sweep_opts.quad_tol, "Absolute tolerance on averaged norms");
  sweep_cmd->add_option("--out", sweep_opts.out, "CSV destination (default stdout)");
  std::string sweep_format = "csv";
  sweep_cmd->add_option("--format", sweep_format, "csv")->check(CLI::IsMember({"csv"}));

  BoundsOptions bounds_opts;
  auto* bounds_cmd = app.add_subcommand("bounds", "Fannes, dynamical Landauer and hypothesis-testing audits");
  bounds_cmd->add_option("--scenario", bounds_opts.scenario, "Scenario file or builtin:<family>[:k=v,...]")->required();
  add_tau_options(bounds_cmd, bounds_opts.tau, bounds_opts.tau_grid);
  bounds_cmd->add_option("--p", bounds_opts.p, "Schatten order (number >= 1 or inf)");
  bounds_cmd->add_option("--quad-tol", bounds_opts.quad_tol, "Absolute tolerance on averaged norms");
  bounds_cmd->add_option("--format", bounds_opts.format, "csv or report")->check(CLI::IsMember({"csv", "report"}));
  bounds_cmd->add_option("--out", bounds_opts.out, "Destination (default stdout)");

  OracleOptions oracle_opts;
  auto* oracle_cmd = app.add_subcommand("oracle-compare", "Closed forms against the numerical pipeline");
  oracle_cmd->add_option("--family", oracle_opts.family, "cmaybe, werner_zx or werner_xx")->required();
  oracle_cmd->add_option("--grid", oracle_opts.grids, "theta=... (cmaybe) or phi=... (werner)");
  oracle_cmd->add_option("--tau-grid", oracle_opts.tau_grid, "Times > 0 (default 12 points on (0, 2pi])");
  oracle_cmd->add_option("--sb", oracle_opts.sb, "System-bath coupling of the numerical model");
  oracle_cmd->add_option("--lambda", oracle_opts.lambda, "Werner mixing parameter");
  oracle_cmd->add_option("--quad-tol", oracle_opts.quad_tol, "Absolute tolerance on averaged norms");
  oracle_cmd->add_option("--tolerance", oracle_opts.tolerance, "Largest accepted deviation");
  oracle_cmd->add_option("--out", oracle_opts.out, "CSV destination (default stdout)");
  std::string oracle_format = "csv";
  oracle_cmd->add_option("--format", oracle_format, "csv")->check(CLI::IsMember({"csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(verify_opts, out);
    if (evolve_cmd->parsed()) return cmd_evolve(evolve_opts, out);
    if (sweep_cmd->parsed()) return cmd_qtsl_sweep(sweep_opts, out);
    if (bounds_cmd->parsed()) return cmd_bounds(bounds_opts, out);
    return cmd_oracle_compare(oracle_opts, out, err);
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << '\n';
    return kPhysicsFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"autotherm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace autotherm::cli
