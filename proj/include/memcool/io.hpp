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

#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "memcool/analysis.hpp"
#include "memcool/asymptotics.hpp"
#include "memcool/errors.hpp"
#include "memcool/spectra.hpp"
#include "memcool/trace.hpp"

namespace memcool::io {

/// 12 significant digits, locale independent.
inline std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline void write_trace_csv(std::ostream& os, const ProtocolTrace& trace, bool dump_sl = false) {
  os << "step,m,s_ground,mutual_info";
  const std::size_t d_sl = trace.initial_sl.size();
  if (dump_sl) {
    for (std::size_t i = 0; i < d_sl; ++i) os << ",sl_" << i;
  }
  os << '\n';
  for (const StepRecord& r : trace.steps) {
    os << r.step << ',' << r.machines << ',' << format_number(r.s_ground) << ','
       << format_number(r.mutual_info);
    if (dump_sl) {
      for (double p : r.sl_probs) os << ',' << format_number(p);
    }
    os << '\n';
  }
}

inline void write_grid_csv(std::ostream& os, const BudgetGrid& grid) {
  os << "k,l,m,s_ground\n";
  for (const BudgetRow& r : grid.rows) {
    os << r.k << ',' << r.ell << ',' << r.m << ',' << format_number(r.s_ground) << '\n';
  }
}

inline nlohmann::json config_json(const MemoryConfig& config) {
  const auto levels = [](const EnergySpectrum& s) {
    return std::vector<double>(s.levels().begin(), s.levels().end());
  };
  return {{"ds", config.d_s()},
          {"dm", config.d_m()},
          {"k", config.k()},
          {"l", config.ell()},
          {"beta", config.beta()},
          {"system_levels", levels(config.system())},
          {"machine_levels", levels(config.machine())}};
}

/// Summary object with keys config, p_star, final_s_ground (null when no run
/// was made), attainable and hierarchy_exponent.
inline nlohmann::json summary_json(const MemoryConfig& config,
                                   const ProtocolTrace* trace = nullptr) {
  nlohmann::json j;
  j["config"] = config_json(config);
  j["p_star"] = p_star(config);
  j["final_s_ground"] = trace ? nlohmann::json(trace->final().s_ground) : nlohmann::json();
  j["attainable"] = attainability_check(config);
  j["hierarchy_exponent"] = hierarchy_exponent(config);
  return j;
}

}  // namespace memcool::io
