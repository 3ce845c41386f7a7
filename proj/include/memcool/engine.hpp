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
#include <functional>
#include <span>
#include <vector>

#include "memcool/errors.hpp"
#include "memcool/majorize.hpp"
#include "memcool/spectra.hpp"
#include "memcool/trace.hpp"

namespace memcool {

/// Diagonal S-L-R state. Flat index mu * (d_l * d_r) + nu * d_r + omega.
struct JointDistribution {
  std::vector<double> probs;
  std::size_t d_s;
  std::size_t d_l;
  std::size_t d_r;

  std::size_t d_sl() const { return d_s * d_l; }

  /// SL marginal, tracing out the reset machines.
  std::vector<double> trace_out_resets() const {
    std::vector<double> sl(d_sl(), 0.0);
    for (std::size_t x = 0; x < sl.size(); ++x) {
      for (std::size_t w = 0; w < d_r; ++w) sl[x] += probs[x * d_r + w];
    }
    return sl;
  }
};

/// sl ⊗ (k - ell) thermal machines.
inline JointDistribution attach_fresh_machines(std::span<const double> sl,
                                               std::span<const double> resets,
                                               std::size_t d_s, std::size_t d_l) {
  if (sl.size() != d_s * d_l) throw InvalidInput("SL vector size does not match d_S * d_L");
  JointDistribution joint{std::vector<double>(sl.size() * resets.size()), d_s, d_l,
                          resets.size()};
  for (std::size_t x = 0; x < sl.size(); ++x) {
    for (std::size_t w = 0; w < resets.size(); ++w) {
      joint.probs[x * resets.size() + w] = sl[x] * resets[w];
    }
  }
  return joint;
}

inline JointDistribution attach_fresh_machines(std::span<const double> sl,
                                               const MemoryConfig& config) {
  validate_distribution(sl);
  const std::vector<double> resets =
      thermal_machines(config.machine(), static_cast<std::size_t>(config.resets()),
                       config.beta());
  return attach_fresh_machines(sl, resets, config.d_s(), config.d_l());
}

/// Step-wise optimal collision: the r-th largest joint entry goes to flat
/// index r in (mu, nu, omega) order, then R is traced out. The result is
/// sorted non-increasing over (mu, nu).
inline std::vector<double> stepwise_optimal_step(JointDistribution joint) {
  std::stable_sort(joint.probs.begin(), joint.probs.end(), std::greater<>());
  return joint.trace_out_resets();
}

/// Global-basis collision: block xi of d_R sorted entries lands on the SL
/// state `sl_order[xi]`, the xi-th level of SL's own energy order.
inline std::vector<double> global_basis_step(JointDistribution joint,
                                             std::span<const std::size_t> sl_order) {
  if (sl_order.size() != joint.d_sl()) throw InvalidInput("sl_order has the wrong length");
  std::stable_sort(joint.probs.begin(), joint.probs.end(), std::greater<>());
  const std::vector<double> blocks = joint.trace_out_resets();
  std::vector<double> sl(blocks.size());
  for (std::size_t xi = 0; xi < blocks.size(); ++xi) sl[sl_order[xi]] = blocks[xi];
  return sl;
}

/// Local sort on SL that makes S as cold as possible for the given spectrum.
inline std::vector<double> final_local_sort(std::span<const double> sl) {
  validate_distribution(sl);
  return sorted_descending(sl);
}

/// Runs one of the permutation protocols for `steps` collisions, starting
/// from thermal S ⊗ thermal M^ell.
inline ProtocolTrace run_protocol(const MemoryConfig& config, int steps, Strategy mode) {
  if (mode == Strategy::nonadaptive) {
    throw InvalidInput("run_protocol handles permutation protocols; use iterate_chain");
  }
  detail::check_run_capacity(config, steps);
  const std::size_t d_s = config.d_s();
  const std::size_t d_l = config.d_l();
  const std::vector<double> resets = thermal_machines(
      config.machine(), static_cast<std::size_t>(config.resets()), config.beta());
  const std::vector<std::size_t> order =
      mode == Strategy::stepwise ? std::vector<std::size_t>{} : sl_energy_order(config);

  ProtocolTrace trace{config, mode,
                      thermal_product(config.system(), config.machine(),
                                      static_cast<std::size_t>(config.ell()), config.beta()),
                      {}};
  trace.steps.reserve(static_cast<std::size_t>(steps));
  std::vector<double> sl = trace.initial_sl;
  for (int n = 1; n <= steps; ++n) {
    JointDistribution joint = attach_fresh_machines(sl, resets, d_s, d_l);
    if (mode == Strategy::stepwise) {
      sl = stepwise_optimal_step(std::move(joint));
    } else {
      sl = global_basis_step(std::move(joint), order);
      if (mode == Strategy::global_final && n == steps) sl = sorted_descending(sl);
    }
    trace.record(n, sl);
  }
  return trace;
}

}  // namespace memcool
