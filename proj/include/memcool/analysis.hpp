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

#include <algorithm>
#include <cmath>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "memcool/engine.hpp"
#include "memcool/errors.hpp"
#include "memcool/information.hpp"
#include "memcool/majorize.hpp"
#include "memcool/nonadaptive.hpp"
#include "memcool/spectra.hpp"
#include "memcool/trace.hpp"

namespace memcool {

/// Runs any strategy, permutation-based or the fixed swap chain.
inline ProtocolTrace simulate(const MemoryConfig& config, int steps, Strategy strategy) {
  if (strategy == Strategy::nonadaptive) return iterate_chain(config, steps);
  return run_protocol(config, steps, strategy);
}

// ---------------------------------------------------------------------------
// Fixed machine budgets

struct BudgetRow {
  int k;
  int ell;
  long long m;
  int n;
  double s_ground;
};

struct BudgetSkip {
  int k;
  int ell;
  long long m;
};

struct BudgetGrid {
  std::vector<BudgetRow> rows;
  std::vector<BudgetSkip> skipped;
  std::vector<std::string> warnings;
};

/// Collision count that exhausts exactly m machines, or 0 when none does.
inline int collisions_for_budget(const MemoryConfig& config, long long m) {
  if (m < config.k()) return 0;
  const long long extra = m - config.k();
  if (extra % config.resets() != 0) return 0;
  return static_cast<int>(extra / config.resets() + 1);
}

/// S ground population of every config after each listed machine budget.
/// Budgets that no integer number of collisions reaches are skipped.
inline BudgetGrid budget_grid(std::span<const MemoryConfig> configs,
                              std::span<const long long> budgets, Strategy strategy) {
  BudgetGrid grid;
  for (const MemoryConfig& config : configs) {
    std::vector<std::pair<long long, int>> wanted;
    for (long long m : budgets) {
      const int n = collisions_for_budget(config, m);
      if (n == 0) {
        grid.skipped.push_back({config.k(), config.ell(), m});
      } else {
        wanted.emplace_back(m, n);
      }
    }
    if (wanted.empty()) continue;
    const int n_max = std::max_element(wanted.begin(), wanted.end(), [](auto& a, auto& b) {
                        return a.second < b.second;
                      })->second;

    if (strategy == Strategy::global_final) {
      // The final local sort depends on where the run stops.
      for (const auto& [m, n] : wanted) {
        const ProtocolTrace trace = run_protocol(config, n, strategy);
        grid.rows.push_back({config.k(), config.ell(), m, n, trace.final().s_ground});
      }
    } else {
      const ProtocolTrace trace = simulate(config, n_max, strategy);
      for (const auto& [m, n] : wanted) {
        grid.rows.push_back({config.k(), config.ell(), m, n,
                             trace.steps[static_cast<std::size_t>(n - 1)].s_ground});
      }
    }
  }
  std::stable_sort(grid.rows.begin(), grid.rows.end(), [](const BudgetRow& a, const BudgetRow& b) {
    return std::tie(a.k, a.ell, a.m) < std::tie(b.k, b.ell, b.m);
  });
  if (grid.rows.empty()) grid.warnings.push_back("no (config, budget) pair has an integer step count");
  return grid;
}

// ---------------------------------------------------------------------------
// Operational CP-divisibility

struct WitnessResult {
  double deviation;
  bool is_markovian_at_tolerance;
};

/// Tolerance below which a composition defect counts as zero.
inline constexpr double kWitnessTolerance = 1e-10;

namespace detail {

/// Column-major product a * b of square maps.
inline std::vector<double> compose(const std::vector<double>& a, const std::vector<double>& b,
                                   std::size_t dim) {
  std::vector<double> out(dim * dim, 0.0);
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double bjc = b[c * dim + j];
      for (std::size_t r = 0; r < dim; ++r) out[c * dim + r] += a[j * dim + r] * bjc;
    }
  }
  return out;
}

inline double max_abs_difference(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

struct SwapProtocol {
  std::vector<double> resets;
  std::size_t d_s;
  std::size_t d_l;

  explicit SwapProtocol(const MemoryConfig& config)
      : resets(thermal_machines(config.machine(), static_cast<std::size_t>(config.resets()),
                                config.beta())),
        d_s(config.d_s()),
        d_l(config.d_l()) {}

  std::vector<double> run(std::vector<double> sl, int steps) const {
    for (int i = 0; i < steps; ++i) sl = neighbour_swap_step(sl, resets, d_s, d_l);
    return sl;
  }

  /// S-level map: basis input |mu> ⊗ memory, evolved, L traced out.
  std::vector<double> s_map(std::span<const double> memory, int steps) const {
    std::vector<double> map(d_s * d_s, 0.0);
    for (std::size_t mu = 0; mu < d_s; ++mu) {
      std::vector<double> sl(d_s * d_l, 0.0);
      for (std::size_t nu = 0; nu < d_l; ++nu) sl[mu * d_l + nu] = memory[nu];
      sl = run(std::move(sl), steps);
      for (std::size_t out = 0; out < d_s; ++out) {
        for (std::size_t nu = 0; nu < d_l; ++nu) map[mu * d_s + out] += sl[out * d_l + nu];
      }
    }
    return map;
  }

  /// SL-level map on basis inputs.
  std::vector<double> sl_map(int steps) const {
    const std::size_t dim = d_s * d_l;
    std::vector<double> map(dim * dim, 0.0);
    for (std::size_t x = 0; x < dim; ++x) {
      std::vector<double> sl(dim, 0.0);
      sl[x] = 1.0;
      sl = run(std::move(sl), steps);
      std::copy(sl.begin(), sl.end(), map.begin() + static_cast<std::ptrdiff_t>(x * dim));
    }
    return map;
  }
};

inline void check_witness_times(const MemoryConfig& config, int t, int n) {
  if (t < 1 || t >= n) throw InvalidInput("witness times must satisfy 1 <= t < n");
  check_run_capacity(config, n);
}

}  // namespace detail

/// Compares the S-level map over [0, n] with the composition of the maps
/// over [t, n] and [0, t], where the later map starts from the memory state
/// left at time t by a thermal S input. Uses the fixed swap protocol, whose
/// maps are linear.
inline WitnessResult cp_divisibility_witness(const MemoryConfig& config, int t, int n) {
  detail::check_witness_times(config, t, n);
  const detail::SwapProtocol protocol(config);
  const std::vector<double> memory =
      thermal_machines(config.machine(), static_cast<std::size_t>(config.ell()), config.beta());

  const std::vector<double> full = protocol.s_map(memory, n);
  const std::vector<double> early = protocol.s_map(memory, t);

  const std::vector<double> sl_t = protocol.run(
      thermal_product(config.system(), config.machine(), static_cast<std::size_t>(config.ell()),
                      config.beta()),
      t);
  std::vector<double> memory_t(protocol.d_l, 0.0);
  for (std::size_t mu = 0; mu < protocol.d_s; ++mu) {
    for (std::size_t nu = 0; nu < protocol.d_l; ++nu) memory_t[nu] += sl_t[mu * protocol.d_l + nu];
  }
  const std::vector<double> late = protocol.s_map(memory_t, n - t);

  const double deviation =
      detail::max_abs_difference(full, detail::compose(late, early, protocol.d_s));
  return {deviation, deviation <= kWitnessTolerance};
}

/// The same test on the S-L level, where no memory is cut.
inline WitnessResult sl_divisibility_witness(const MemoryConfig& config, int t, int n) {
  detail::check_witness_times(config, t, n);
  const detail::SwapProtocol protocol(config);
  const std::vector<double> full = protocol.sl_map(n);
  const std::vector<double> composed =
      detail::compose(protocol.sl_map(n - t), protocol.sl_map(t), protocol.d_s * protocol.d_l);
  const double deviation = detail::max_abs_difference(full, composed);
  return {deviation, deviation <= kWitnessTolerance};
}

// ---------------------------------------------------------------------------
// Trace comparison

struct ComparisonRow {
  long long m;
  double s_ground_a;
  double s_ground_b;
  bool spectra_equivalent;
};

struct TraceComparison {
  std::vector<ComparisonRow> rows;
  std::vector<std::string> warnings;
};

/// Aligns two runs of the same scenario on machine count.
inline TraceComparison trace_compare(const ProtocolTrace& a, const ProtocolTrace& b) {
  if (!(a.config == b.config)) throw InvalidInput("traces belong to different scenarios");
  std::map<long long, const StepRecord*> by_m;
  for (const StepRecord& r : b.steps) by_m[r.machines] = &r;

  TraceComparison out;
  for (const StepRecord& ra : a.steps) {
    const auto it = by_m.find(ra.machines);
    if (it == by_m.end()) continue;
    const StepRecord& rb = *it->second;
    const std::vector<double> sa = sorted_descending(ra.sl_probs);
    const std::vector<double> sb = sorted_descending(rb.sl_probs);
    out.rows.push_back({ra.machines, ra.s_ground, rb.s_ground,
                        detail::max_abs_difference(sa, sb) <= kTolerance});
  }
  if (out.rows.empty()) out.warnings.push_back("traces share no machine count");
  return out;
}

}  // namespace memcool
