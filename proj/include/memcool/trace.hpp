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

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "memcool/errors.hpp"
#include "memcool/information.hpp"
#include "memcool/spectra.hpp"

namespace memcool {

enum class Strategy {
  stepwise,      // step-wise optimal: sort into local (mu, nu, omega) order
  global,        // sort into the SL global energy order every step
  global_final,  // global, plus a final local sort on the last step
  nonadaptive,   // fixed neighbour-swap protocol (transition matrix)
};

inline std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::stepwise: return "stepwise";
    case Strategy::global: return "global";
    case Strategy::global_final: return "global-final";
    case Strategy::nonadaptive: return "nonadaptive";
  }
  return "unknown";
}

inline Strategy parse_strategy(std::string_view name) {
  if (name == "stepwise") return Strategy::stepwise;
  if (name == "global") return Strategy::global;
  if (name == "global-final") return Strategy::global_final;
  if (name == "nonadaptive") return Strategy::nonadaptive;
  throw InvalidInput("unknown mode '" + std::string(name) + "'");
}

/// Total machines consumed after n collisions.
inline long long machines_used(const MemoryConfig& config, long long n) {
  return config.k() + (n - 1) * config.resets();
}

/// Population of S's ground level: the first d_L entries of an SL vector.
inline double ground_population(std::span<const double> sl, std::size_t d_l) {
  return std::accumulate(sl.begin(), sl.begin() + static_cast<std::ptrdiff_t>(d_l), 0.0);
}

struct StepRecord {
  int step;
  long long machines;
  double s_ground;
  double mutual_info;
  std::vector<double> sl_probs;
};

/// Per-step history of one protocol run. `initial_sl` is the thermal state
/// before the first collision; `steps` holds n = 1, 2, ...
struct ProtocolTrace {
  MemoryConfig config;
  Strategy strategy;
  std::vector<double> initial_sl;
  std::vector<StepRecord> steps;

  double initial_mutual_info() const {
    return mutual_information(initial_sl, config.d_s(), config.d_l());
  }
  const StepRecord& final() const { return steps.back(); }

  /// Appends step n. Drift away from unit norm means a protocol bug, so it
  /// is reported instead of renormalized.
  void record(int n, std::vector<double> sl) {
    const double total = std::accumulate(sl.begin(), sl.end(), 0.0);
    if (std::abs(total - 1.0) > kTolerance) {
      throw std::logic_error("normalization drift at step " + std::to_string(n));
    }
    const std::size_t d_l = config.d_l();
    const double ground = ground_population(sl, d_l);
    const double info = mutual_information(sl, config.d_s(), d_l);
    steps.push_back({n, machines_used(config, n), ground, info, std::move(sl)});
  }
};

namespace detail {

inline void check_run_capacity(const MemoryConfig& config, int steps) {
  if (steps < 1) throw InvalidInput("steps must be at least 1");
  // d_S * d_M^k, without overflowing on the way.
  const std::size_t joint = detail::checked_pow(config.d_m(), static_cast<std::size_t>(config.k()));
  if (joint > kMaxJointSize / config.d_s()) {
    throw CapacityError("joint S-L-R dimension exceeds " + std::to_string(kMaxJointSize));
  }
}

}  // namespace detail

}  // namespace memcool
