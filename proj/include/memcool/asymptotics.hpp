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
#include <cstddef>
#include <vector>

#include "memcool/errors.hpp"
#include "memcool/majorize.hpp"
#include "memcool/spectra.hpp"

namespace memcool {

namespace detail {

/// Normalized ladder exp(-rate * n), n = 0 .. d-1.
inline std::vector<double> geometric_state(std::size_t d, double rate) {
  std::vector<double> p(d);
  double z = 0.0;
  for (std::size_t n = 0; n < d; ++n) {
    p[n] = std::exp(-rate * static_cast<double>(n));
    z += p[n];
  }
  for (double& x : p) x /= z;
  return p;
}

}  // namespace detail

/// Memoryless limit with k fresh machines per step; ell is ignored.
inline std::vector<double> markov_asymptotic_state(const MemoryConfig& config) {
  return detail::geometric_state(config.d_s(),
                                 config.beta() * config.k() * config.machine_gap());
}

/// beta (k - ell) d_M^ell Eps_max: the single number that ranks asymptotic
/// states across memory structures.
inline double hierarchy_exponent(const MemoryConfig& config) {
  return config.beta() * config.resets() * config.memory_dimension() * config.machine_gap();
}

/// Upper bound on the asymptotic ground-state population of S.
inline double p_star(const MemoryConfig& config) {
  return 1.0 / quasi_partition(config.d_s(), config.beta(),
                               config.resets() * config.memory_dimension() *
                                   config.machine_gap());
}

/// Asymptotically attainable S state for a memory of arbitrary dimension
/// d_L whose reset gap is `gap`.
inline std::vector<double> rho_star_S(std::size_t d_s, double d_l, double gap,
                                      double beta) {
  if (d_s < 1 || d_l < 1.0) throw InvalidInput("dimensions must be positive");
  return detail::geometric_state(d_s, beta * d_l * gap);
}

inline std::vector<double> rho_star_S(const MemoryConfig& config) {
  return rho_star_S(config.d_s(), config.memory_dimension(),
                    config.resets() * config.machine_gap(), config.beta());
}

/// Asymptotically attainable SL state (passive order over d_S d_M^ell levels).
inline std::vector<double> rho_star_SL(const MemoryConfig& config) {
  return detail::geometric_state(config.d_sl(),
                                 config.beta() * config.resets() * config.machine_gap());
}

/// Whether the initial thermal SL state is majorized by rho_star_SL, the
/// precondition under which rho_star_S is reached.
inline bool attainability_check(const MemoryConfig& config) {
  const std::vector<double> initial =
      thermal_product(config.system(), config.machine(),
                      static_cast<std::size_t>(config.ell()), config.beta());
  return is_majorized_by(initial, rho_star_SL(config));
}

/// Largest asymptotic population of any d-dimensional SL subspace.
inline double subspace_population_bound(const MemoryConfig& config, std::size_t d) {
  const std::size_t d_sl = config.d_sl();
  if (d < 1 || d > d_sl) throw InvalidInput("subspace dimension out of range");
  const double gap = config.resets() * config.machine_gap();
  return quasi_partition(d, config.beta(), gap) /
         quasi_partition(d_sl, config.beta(), gap);
}

enum class Hierarchy { a_majorized_by_b, b_majorized_by_a, equal };

/// Orders two scenarios by their asymptotic S states: the smaller exponent
/// is the warmer limit.
inline Hierarchy hierarchy_compare(const MemoryConfig& a, const MemoryConfig& b) {
  const double xa = hierarchy_exponent(a);
  const double xb = hierarchy_exponent(b);
  if (std::abs(xa - xb) <= kTolerance * std::max(std::abs(xa), std::abs(xb))) {
    return Hierarchy::equal;
  }
  return xa < xb ? Hierarchy::a_majorized_by_b : Hierarchy::b_majorized_by_a;
}

}  // namespace memcool
