// Copyright 2026 The sqbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// sqbound: command-line front end. Exit codes: 0 success, 1 selftest
// failure, 2 invalid input (the message names the violated invariant).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sqb/bosonic.hpp"
#include "sqb/errors.hpp"
#include "sqb/io.hpp"
#include "sqb/measures.hpp"
#include "sqb/partitions.hpp"
#include "sqb/rates.hpp"
#include "sqb/selftest.hpp"
#include "sqb/squash.hpp"

namespace {

using sqb::io::Json;
using sqb::io::csv_line;
using sqb::io::format_number;
using sqb::io::json_number;

constexpr const char* kHeuristicNote =
    "bounds for mixed channel outputs are upper estimates from a finite search over squashing channels and "
    "inputs; values are exact when the output at the reported input is pure (exact_inner = true)";

struct Common {
  std::string output;
  std::string format = "csv";
};

struct SquashFlags {
  int restarts = 20;
  std::uint64_t seed = 0;
  int max_iters = 2000;
  double tol = 1e-8;
  int squash_dim = 0;
  int ancilla_dim = 0;
  long dim_cap = 64;

  sqb::SquashConfig config() const {
    sqb::SquashConfig c;
    c.restarts = restarts;
    c.seed = seed;
    c.max_iters = max_iters;
    c.tol = tol;
    c.squash_output_dim = squash_dim;
    c.ancilla_dim = ancilla_dim;
    c.dim_cap = dim_cap;
    return c;
  }
  Json echo() const {
    Json j;
    j["restarts"] = restarts;
    j["seed"] = seed;
    j["max_iters"] = max_iters;
    j["tol"] = json_number(tol);
    j["squash_dim"] = squash_dim;
    j["ancilla_dim"] = ancilla_dim;
    j["dim_cap"] = dim_cap;
    return j;
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("-o,--output", c.output, "Write to this file instead of stdout");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

void add_squash(CLI::App* sub, SquashFlags& s, const std::string& prefix) {
  sub->add_option("--" + prefix + "restarts", s.restarts, "Squashing-channel search restarts")->capture_default_str();
  sub->add_option("--" + prefix + "max-iters", s.max_iters, "Simplex iterations per restart")->capture_default_str();
  sub->add_option("--" + prefix + "tol", s.tol, "Simplex objective tolerance")->capture_default_str();
  sub->add_option("--squash-dim", s.squash_dim, "Dimension of the squashed extension (0 = purifier rank)")
      ->capture_default_str();
  sub->add_option("--ancilla-dim", s.ancilla_dim, "Traced Stinespring factor (0 = automatic)")->capture_default_str();
  sub->add_option("--dim-cap", s.dim_cap, "Largest dim(state) * dim(E') accepted")->capture_default_str();
}

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw sqb::ParseError("cannot write " + c.output);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<sqb::Measure> measures_for(const std::string& m) {
  if (m == "esq") return {sqb::Measure::esq};
  if (m == "esq-tilde") return {sqb::Measure::esq_tilde};
  return {sqb::Measure::esq, sqb::Measure::esq_tilde};
}

// qinfo ----------------------------------------------------------------------

struct QinfoArgs {
  Common common;
  std::string state_path;
  std::string partition;
  std::string cond;
};

int run_qinfo(const QinfoArgs& a) {
  const auto state = sqb::io::load_state(a.state_path);
  std::vector<std::array<std::string, 3>> rows;  // quantity, subsystems, value
  for (const auto& l : state.labels())
    rows.push_back({"entropy", l, format_number(sqb::entropy(state, sqb::Labels{l}))});
  rows.push_back({"entropy", sqb::format_set(state.labels()), format_number(sqb::entropy(state, state.labels()))});
  rows.push_back({"purity_max_eigenvalue", sqb::format_set(state.labels()),
                  format_number(sqb::density_eigenvalues(state.matrix()).maxCoeff())});
  if (!a.partition.empty()) {
    const auto g = sqb::Partition::parse(a.partition);
    sqb::Labels cond;
    if (!a.cond.empty()) cond = sqb::Partition::parse(a.cond).ground();
    const auto spec = sqb::block_spec_for(state, g, cond);
    const auto ci = sqb::conditional_informations(state, spec);
    std::string where = g.to_string();
    if (!cond.empty()) where += " given " + sqb::format_set(cond);
    rows.push_back({"cmi_total", where, format_number(ci.total)});
    rows.push_back({"cmi_dual", where, format_number(ci.dual)});
  }
  if (a.common.format == "json") {
    Json cfg;
    cfg["partition"] = a.partition;
    cfg["cond"] = a.cond;
    Json j;
    j["metadata"] = sqb::io::metadata("qinfo", cfg);
    Json arr = Json::array();
    for (const auto& r : rows) {
      Json e;
      e["quantity"] = r[0];
      e["subsystems"] = r[1];
      e["value_bits"] = r[2] == "inf" ? Json(r[2]) : Json(std::stod(r[2]));
      arr.push_back(std::move(e));
    }
    j["results"] = std::move(arr);
    emit(a.common, dump(j));
  } else {
    std::string text = csv_line({"quantity", "subsystems", "value_bits"}) + "\n";
    for (const auto& r : rows) text += csv_line({r[0], r[1], r[2]}) + "\n";
    emit(a.common, text);
  }
  return 0;
}

// esq ------------------------------------------------------------------------

struct EsqArgs {
  Common common;
  SquashFlags squash;
  std::string state_path;
  std::string partition;
  std::string measure = "both";
};

int run_esq(const EsqArgs& a) {
  const auto state = sqb::io::load_state(a.state_path);
  const auto g = sqb::Partition::parse(a.partition);
  const auto cfg = a.squash.config();
  cfg.validate();

  std::vector<sqb::SquashResult> results;
  for (auto m : measures_for(a.measure)) {
    if (state.is_pure()) {
      sqb::SquashResult r;
      r.measure = m;
      r.value_bits = sqb::esq_exact_pure(state, g, m);
      r.converged = true;
      r.extension.kind = "pure";
      results.push_back(r);
    } else {
      results.push_back(sqb::esq_upper_variational(state, g, m, cfg));
    }
  }

  struct Row {
    std::string measure;
    double value;
    std::string method;
    bool converged;
  };
  std::vector<Row> rows;
  if (a.measure == "min") {
    const auto& best = results[0].value_bits <= results[1].value_bits ? results[0] : results[1];
    rows.push_back({"min", best.value_bits, best.extension.kind, results[0].converged && results[1].converged});
  } else {
    for (const auto& r : results)
      rows.push_back({std::string(sqb::to_string(r.measure)), r.value_bits, r.extension.kind, r.converged});
  }

  if (a.common.format == "json") {
    Json cfg_echo = a.squash.echo();
    cfg_echo["partition"] = g.to_string();
    cfg_echo["measure"] = a.measure;
    Json j;
    j["metadata"] = sqb::io::metadata("esq", cfg_echo);
    j["metadata"]["note"] = "mixed-state values are upper bounds on the squashed entanglement";
    Json arr = Json::array();
    for (const auto& r : results) arr.push_back(sqb::io::to_json(r));
    j["results"] = std::move(arr);
    if (a.measure == "min") j["min_bits"] = json_number(rows[0].value);
    emit(a.common, dump(j));
  } else {
    std::string text = csv_line({"partition", "measure", "value_bits", "method", "converged"}) + "\n";
    for (const auto& r : rows)
      text += csv_line({g.to_string(), r.measure, format_number(r.value), r.method, r.converged ? "true" : "false"}) +
              "\n";
    emit(a.common, text);
  }
  return 0;
}

// bounds-finite --------------------------------------------------------------

struct FiniteArgs {
  Common common;
  SquashFlags squash;
  std::string channel_path;
  std::vector<std::string> partitions;
  int restarts = 4;
  std::uint64_t seed = 0;
  int max_iters = 500;
  bool two_receiver = false;
};

std::string weights_string(const sqb::RateConstraint& rc) {
  std::string s;
  for (const auto& [m, w] : rc.weights) {
    if (!s.empty()) s += ';';
    s += sqb::format_set(m) + ":" + format_number(w);
  }
  return s;
}

std::string schmidt_string(const sqb::RateConstraint& rc) {
  std::string s;
  for (double p : rc.input.schmidt) {
    if (!s.empty()) s += ';';
    s += format_number(p);
  }
  return s;
}

int run_bounds_finite(const FiniteArgs& a) {
  const auto channel = sqb::io::load_channel(a.channel_path);
  sqb::InputSearchConfig in_cfg;
  in_cfg.restarts = a.restarts;
  in_cfg.seed = a.seed;
  in_cfg.max_iters = a.max_iters;
  if (in_cfg.restarts < 0) throw sqb::SpecError("--restarts must be >= 0");
  auto sq_cfg = a.squash.config();
  sq_cfg.seed = a.seed;

  std::vector<sqb::RateConstraint> constraints;
  std::vector<std::string> names;
  std::vector<std::array<double, 8>> coeffs;
  if (a.two_receiver) {
    for (auto& nc : sqb::two_receiver_report(channel, in_cfg, sq_cfg)) {
      names.push_back(nc.name);
      coeffs.push_back(nc.coefficients);
      constraints.push_back(std::move(nc.constraint));
    }
  } else {
    std::vector<sqb::Partition> parts;
    for (const auto& p : a.partitions) parts.push_back(sqb::Partition::parse(p));
    constraints = sqb::evaluate_bounds(channel, parts, in_cfg, sq_cfg);
  }

  if (a.common.format == "json") {
    Json cfg_echo;
    cfg_echo["restarts"] = a.restarts;
    cfg_echo["seed"] = a.seed;
    cfg_echo["max_iters"] = a.max_iters;
    cfg_echo["partitions"] = a.partitions;
    cfg_echo["two_receiver"] = a.two_receiver;
    cfg_echo["squash"] = a.squash.echo();
    Json j;
    j["metadata"] = sqb::io::metadata("bounds-finite", cfg_echo);
    j["metadata"]["note"] = kHeuristicNote;
    Json arr = Json::array();
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      Json e = sqb::io::to_json(constraints[i]);
      if (a.two_receiver) {
        e["name"] = names[i];
        Json c = Json::array();
        for (double v : coeffs[i]) c.push_back(json_number(v));
        e["coefficients_E_AB_AC_BC_ABC_K_AB_AC_BC_ABC"] = std::move(c);
      }
      arr.push_back(std::move(e));
    }
    j["constraints"] = std::move(arr);
    emit(a.common, dump(j));
  } else {
    std::vector<std::string> header = {"partition",      "weights", "bound_bits", "measure_used", "input_schmidt",
                                       "restarts",       "seed",    "converged",  "exact_inner"};
    if (a.two_receiver) header.insert(header.begin(), "name");
    std::string text = csv_line(header) + "\n";
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      const auto& rc = constraints[i];
      std::vector<std::string> row = {rc.partition.to_string(),
                                      weights_string(rc),
                                      format_number(rc.bound_bits),
                                      std::string(sqb::to_string(rc.measure_used)),
                                      schmidt_string(rc),
                                      std::to_string(rc.optimizer.restarts),
                                      std::to_string(rc.optimizer.seed),
                                      rc.optimizer.converged ? "true" : "false",
                                      rc.optimizer.exact_inner ? "true" : "false"};
      if (a.two_receiver) row.insert(row.begin(), names[i]);
      text += csv_line(row) + "\n";
    }
    emit(a.common, text);
  }
  return 0;
}

// bounds-bosonic and sweep -----------------------------------------------------

struct BosonicArgs {
  Common common;
  std::optional<double> eta_b;
  std::optional<double> eta_c;
  std::optional<double> ns;
  int steps = 10;
};

void check_eta(double eta, const char* name) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw sqb::DomainError(std::string(name) + " must lie in [0, 1] (transmissivity), got " + format_number(eta));
}

std::string render_bosonic(const Common& common, const std::string& command, Json cfg,
                           const std::vector<sqb::bosonic::BoundReport>& reports, bool with_ns) {
  if (common.format == "json") {
    Json j;
    j["metadata"] = sqb::io::metadata(command, std::move(cfg));
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(sqb::io::to_json(r));
    j["results"] = std::move(arr);
    return dump(j);
  }
  std::string text = csv_line(sqb::io::bosonic_csv_header(with_ns)) + "\n";
  for (const auto& r : reports) text += csv_line(sqb::io::bosonic_csv_row(r)) + "\n";
  return text;
}

int run_bounds_bosonic(const BosonicArgs& a) {
  check_eta(*a.eta_b, "--eta-b");
  check_eta(*a.eta_c, "--eta-c");
  if (a.ns && !(*a.ns >= 0)) throw sqb::DomainError("--ns must be >= 0 (mean photon number)");
  const auto r = sqb::bosonic::theorem3_report(*a.eta_b, *a.eta_c, a.ns);
  Json cfg;
  cfg["eta_b"] = json_number(*a.eta_b);
  cfg["eta_c"] = json_number(*a.eta_c);
  cfg["ns"] = a.ns ? json_number(*a.ns) : Json();
  emit(a.common, render_bosonic(a.common, "bounds-bosonic", cfg, {r}, a.ns.has_value()));
  return 0;
}

int run_sweep(const BosonicArgs& a) {
  if (a.steps < 1) throw sqb::DomainError("--sweep-steps must be >= 1");
  if (a.eta_b) check_eta(*a.eta_b, "--eta-b");
  if (a.eta_c) check_eta(*a.eta_c, "--eta-c");
  if (a.ns && !(*a.ns >= 0)) throw sqb::DomainError("--ns must be >= 0 (mean photon number)");

  // Grid k / steps on each free coordinate, restricted to eta_b + eta_c <= 1;
  // rows come out sorted by (eta_b, eta_c).
  auto grid = [&](const std::optional<double>& fixed) {
    std::vector<double> v;
    if (fixed) {
      v.push_back(*fixed);
    } else {
      for (int k = 0; k <= a.steps; ++k) v.push_back(static_cast<double>(k) / a.steps);
    }
    return v;
  };
  std::vector<sqb::bosonic::BoundReport> reports;
  for (double eb : grid(a.eta_b))
    for (double ec : grid(a.eta_c))
      if (eb + ec <= 1.0 + 1e-12) reports.push_back(sqb::bosonic::theorem3_report(eb, ec, a.ns));

  Json cfg;
  cfg["sweep_steps"] = a.steps;
  cfg["eta_b"] = a.eta_b ? json_number(*a.eta_b) : Json();
  cfg["eta_c"] = a.eta_c ? json_number(*a.eta_c) : Json();
  cfg["ns"] = a.ns ? json_number(*a.ns) : Json();
  emit(a.common, render_bosonic(a.common, "sweep", cfg, reports, a.ns.has_value()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sqbound: squashed-entanglement bounds for quantum broadcast channels"};
  app.set_version_flag("--version", std::string(SQBOUND_VERSION));
  app.require_subcommand(1, 1);

  QinfoArgs qa;
  auto* qinfo = app.add_subcommand("qinfo", "Entropies and conditional multipartite informations of a state");
  qinfo->add_option("state", qa.state_path, "State JSON file")->required()->check(CLI::ExistingFile);
  qinfo->add_option("--partition", qa.partition, "Blocks, e.g. \"A|B,C\"");
  qinfo->add_option("--cond", qa.cond, "Conditioning labels, e.g. \"E\" or \"E,F\"");
  add_common(qinfo, qa.common);

  EsqArgs ea;
  auto* esq = app.add_subcommand("esq", "Squashed entanglement of a state (exact if pure, upper bound otherwise)");
  esq->add_option("state", ea.state_path, "State JSON file")->required()->check(CLI::ExistingFile);
  esq->add_option("--partition", ea.partition, "Partition of the state's labels, e.g. \"A|B|C\"")->required();
  esq->add_option("--measure", ea.measure, "Which measure to report")
      ->check(CLI::IsMember({"esq", "esq-tilde", "both", "min"}))
      ->capture_default_str();
  esq->add_option("--seed", ea.squash.seed, "Seed of the squashing search")->capture_default_str();
  add_squash(esq, ea.squash, "");
  add_common(esq, ea.common);

  FiniteArgs fa;
  auto* finite = app.add_subcommand("bounds-finite", "Rate-region bounds for a finite-dimensional broadcast channel");
  finite->add_option("channel", fa.channel_path, "Channel JSON file")->required()->check(CLI::ExistingFile);
  finite->add_option("--partition", fa.partitions, "Partition of {R, outputs}; repeatable (default: all)");
  finite->add_flag("--two-receiver", fa.two_receiver, "Report the four named two-receiver inequalities");
  finite->add_option("--restarts", fa.restarts, "Random restarts of the input search")->capture_default_str();
  finite->add_option("--max-iters", fa.max_iters, "Simplex iterations per input restart")->capture_default_str();
  finite->add_option("--seed", fa.seed, "Seed of all randomized searches")->capture_default_str();
  add_squash(finite, fa.squash, "squash-");
  add_common(finite, fa.common);

  BosonicArgs ba;
  auto* bos = app.add_subcommand("bounds-bosonic", "Closed-form bounds for the pure-loss bosonic broadcast channel");
  bos->add_option("--eta-b", ba.eta_b, "Transmissivity to receiver B")->required();
  bos->add_option("--eta-c", ba.eta_c, "Transmissivity to receiver C")->required();
  bos->add_option("--ns", ba.ns, "Mean input photon number (adds finite-N_S columns)");
  add_common(bos, ba.common);

  BosonicArgs sa;
  auto* sweep = app.add_subcommand("sweep", "Bosonic bounds over a grid of transmissivities");
  sweep->add_option("--sweep-steps", sa.steps, "Grid points per axis minus one")->capture_default_str();
  sweep->add_option("--eta-b", sa.eta_b, "Hold eta_b fixed");
  sweep->add_option("--eta-c", sa.eta_c, "Hold eta_c fixed");
  sweep->add_option("--ns", sa.ns, "Mean input photon number (adds finite-N_S columns)");
  add_common(sweep, sa.common);

  std::uint64_t self_seed = 0;
  auto* self = app.add_subcommand("selftest", "Run the built-in invariant checks");
  self->add_option("--seed", self_seed, "Seed of the random instances")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*qinfo) return run_qinfo(qa);
    if (*esq) return run_esq(ea);
    if (*finite) return run_bounds_finite(fa);
    if (*bos) return run_bounds_bosonic(ba);
    if (*sweep) return run_sweep(sa);
    if (*self) return sqb::run_selftest(std::cout, self_seed) ? 0 : 1;
  } catch (const sqb::Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
