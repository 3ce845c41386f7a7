// Copyright 2026 The memcool Authors
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

// memcool: asymptotic bounds and protocol simulations for cooling with
// memory-carrying machines.
//
// Exit codes: 0 success, 2 usage error, 3 I/O error, 4 capacity refusal.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "memcool/io.hpp"
#include "memcool/memcool.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitCapacity = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScenarioFlags {
  std::optional<std::size_t> ds;
  std::optional<std::size_t> dm;
  std::optional<int> k;
  std::optional<int> ell;
  std::optional<double> beta;
  std::vector<double> system_levels;
  std::vector<double> machine_levels;
  std::optional<double> machine_gap;
  std::string json_path;
};

memcool::EnergySpectrum system_spectrum(const ScenarioFlags& f) {
  if (!f.system_levels.empty()) {
    if (f.ds && *f.ds != f.system_levels.size()) {
      throw UsageError("--ds does not match the number of --system-levels");
    }
    return memcool::EnergySpectrum(f.system_levels);
  }
  return memcool::EnergySpectrum::ladder(f.ds.value_or(2));
}

memcool::EnergySpectrum machine_spectrum(const ScenarioFlags& f) {
  if (!f.machine_levels.empty() && f.machine_gap) {
    throw UsageError("give either --machine-levels or --machine-gap, not both");
  }
  if (f.machine_gap) {
    if (f.dm && *f.dm != 2) throw UsageError("--machine-gap describes qubit machines (--dm 2)");
    return memcool::EnergySpectrum({0.0, *f.machine_gap});
  }
  if (f.machine_levels.empty()) throw UsageError("a machine spectrum is required");
  if (f.dm && *f.dm != f.machine_levels.size()) {
    throw UsageError("--dm does not match the number of --machine-levels");
  }
  return memcool::EnergySpectrum(f.machine_levels);
}

double require_beta(const ScenarioFlags& f) {
  if (!f.beta) throw UsageError("--beta is required");
  return *f.beta;
}

memcool::MemoryConfig scenario(const ScenarioFlags& f) {
  if (!f.k) throw UsageError("--k is required");
  if (!f.ell) throw UsageError("--l is required");
  const double beta = require_beta(f);
  return memcool::MemoryConfig(system_spectrum(f), machine_spectrum(f), *f.k, *f.ell, beta);
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += memcool::io::format_number(v[i]);
  }
  return out;
}

/// Writes `text` to `path`, or stdout for "-".
void emit(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os << text;
  if (!os.flush()) throw IoError("write to '" + path + "' failed");
}

void emit_json(const std::string& path, const nlohmann::json& j) {
  if (!path.empty()) emit(path, j.dump(2) + "\n");
}

int cmd_bound(const ScenarioFlags& f) {
  const memcool::MemoryConfig config = scenario(f);
  std::cout << "p_star             " << memcool::io::format_number(memcool::p_star(config)) << '\n'
            << "rho_star_S         " << join(memcool::rho_star_S(config)) << '\n'
            << "rho_star_SL        " << join(memcool::rho_star_SL(config)) << '\n'
            << "attainable         " << (memcool::attainability_check(config) ? "true" : "false")
            << '\n'
            << "hierarchy_exponent "
            << memcool::io::format_number(memcool::hierarchy_exponent(config)) << '\n';
  emit_json(f.json_path, memcool::io::summary_json(config));
  return 0;
}

struct SimulateFlags {
  std::string mode = "stepwise";
  int steps = 0;
  std::string out = "-";
  bool dump_sl = false;
};

int cmd_simulate(const ScenarioFlags& f, const SimulateFlags& s) {
  const memcool::MemoryConfig config = scenario(f);
  memcool::Strategy strategy;
  try {
    strategy = memcool::parse_strategy(s.mode);
  } catch (const memcool::InvalidInput& e) {
    throw UsageError(e.what());
  }
  if (s.steps < 1) throw UsageError("--steps must be at least 1");
  const memcool::ProtocolTrace trace = memcool::simulate(config, s.steps, strategy);

  std::ostringstream csv;
  memcool::io::write_trace_csv(csv, trace, s.dump_sl);
  emit(s.out, csv.str());

  std::ostream& summary = s.out == "-" ? std::cerr : std::cout;
  const double bound = memcool::p_star(config);
  summary << "final_s_ground " << memcool::io::format_number(trace.final().s_ground) << '\n'
          << "p_star         " << memcool::io::format_number(bound) << '\n'
          << "gap_to_bound   " << memcool::io::format_number(bound - trace.final().s_ground)
          << '\n';
  emit_json(f.json_path, memcool::io::summary_json(config, &trace));
  return 0;
}

struct CompareFlags {
  long long budget_min = 1;
  long long budget_max = 0;
  int k_max = 7;
  std::string mode = "stepwise";
  std::string out = "-";
};

int cmd_compare(const ScenarioFlags& f, const CompareFlags& c) {
  const double beta = require_beta(f);
  const memcool::EnergySpectrum system = system_spectrum(f);
  const memcool::EnergySpectrum machine = machine_spectrum(f);
  memcool::Strategy strategy;
  try {
    strategy = memcool::parse_strategy(c.mode);
  } catch (const memcool::InvalidInput& e) {
    throw UsageError(e.what());
  }
  if (c.k_max < 1) throw UsageError("--kmax must be at least 1");

  std::vector<memcool::MemoryConfig> configs;
  for (int k = 1; k <= c.k_max; ++k) {
    for (int ell = 0; ell < k; ++ell) configs.emplace_back(system, machine, k, ell, beta);
  }
  std::vector<long long> budgets;
  for (long long m = c.budget_min; m <= c.budget_max; ++m) budgets.push_back(m);

  const memcool::BudgetGrid grid = memcool::budget_grid(configs, budgets, strategy);
  for (const auto& skip : grid.skipped) {
    std::cerr << "skip k=" << skip.k << " l=" << skip.ell << " m=" << skip.m << '\n';
  }
  for (const auto& w : grid.warnings) std::cerr << "warning: " << w << '\n';

  std::ostringstream csv;
  memcool::io::write_grid_csv(csv, grid);
  emit(c.out, csv.str());
  return 0;
}

struct WitnessFlags {
  int t = 0;
  int n = 0;
};

int cmd_witness(const ScenarioFlags& f, const WitnessFlags& w) {
  const memcool::MemoryConfig config = scenario(f);
  if (w.t < 1 || w.t >= w.n) throw UsageError("--t and --n must satisfy 1 <= t < n");
  const memcool::WitnessResult s_level = memcool::cp_divisibility_witness(config, w.t, w.n);
  const memcool::WitnessResult sl_level = memcool::sl_divisibility_witness(config, w.t, w.n);
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  std::cout << "s_level_deviation  " << memcool::io::format_number(s_level.deviation)
            << "  markovian " << flag(s_level.is_markovian_at_tolerance) << '\n'
            << "sl_level_deviation " << memcool::io::format_number(sl_level.deviation)
            << "  markovian " << flag(sl_level.is_markovian_at_tolerance) << '\n';
  emit_json(f.json_path,
            {{"config", memcool::io::config_json(config)},
             {"t", w.t},
             {"n", w.n},
             {"s_level", {{"deviation", s_level.deviation},
                          {"markovian", s_level.is_markovian_at_tolerance}}},
             {"sl_level", {{"deviation", sl_level.deviation},
                           {"markovian", sl_level.is_markovian_at_tolerance}}}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cooling bounds and protocol simulations for collision models with memory"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Scenario file with one 'key = value' per line");

  ScenarioFlags f;
  app.add_option("--ds", f.ds, "System dimension (unit-ladder spectrum unless --system-levels)");
  app.add_option("--dm", f.dm, "Machine dimension (checked against the machine spectrum)");
  app.add_option("--k", f.k, "Machines per collision");
  app.add_option("--l", f.ell, "Memory-carrying machines");
  app.add_option("--beta", f.beta, "Inverse temperature");
  app.add_option("--system-levels", f.system_levels, "System energies, e.g. 0,1")->delimiter(',');
  app.add_option("--machine-levels", f.machine_levels, "Machine energies, e.g. 0,0.5,1.2")
      ->delimiter(',');
  app.add_option("--machine-gap", f.machine_gap, "Qubit machine gap; same as --machine-levels 0,g");
  app.add_option("--json", f.json_path, "Write a JSON summary here ('-' for stdout)");

  CLI::App* bound = app.add_subcommand("bound", "Asymptotic bounds for one scenario");

  SimulateFlags sim;
  CLI::App* simulate = app.add_subcommand("simulate", "Run a protocol and write a CSV trace");
  simulate->add_option("--mode", sim.mode, "stepwise | global | global-final | nonadaptive");
  simulate->add_option("--steps", sim.steps, "Number of collisions")->required();
  simulate->add_option("--out", sim.out, "CSV output path ('-' for stdout)");
  simulate->add_flag("--dump-sl", sim.dump_sl, "Append the SL distribution to each row");

  CompareFlags cmp;
  CLI::App* compare = app.add_subcommand("compare", "Ground population at fixed machine budgets");
  compare->add_option("--budget-max", cmp.budget_max, "Largest machine budget m")->required();
  compare->add_option("--budget-min", cmp.budget_min, "Smallest machine budget m");
  compare->add_option("--kmax", cmp.k_max, "Sweep 1 <= k <= kmax, 0 <= l < k");
  compare->add_option("--mode", cmp.mode, "stepwise | global | global-final | nonadaptive");
  compare->add_option("--out", cmp.out, "CSV output path ('-' for stdout)");

  WitnessFlags wit;
  CLI::App* witness = app.add_subcommand("witness", "Operational CP-divisibility test");
  witness->add_option("--t", wit.t, "Intermediate time")->required();
  witness->add_option("--n", wit.n, "Final time")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (bound->parsed()) return cmd_bound(f);
    if (simulate->parsed()) return cmd_simulate(f, sim);
    if (compare->parsed()) return cmd_compare(f, cmp);
    if (witness->parsed()) return cmd_witness(f, wit);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const memcool::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const memcool::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
