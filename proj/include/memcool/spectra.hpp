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
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "memcool/errors.hpp"

namespace memcool {

namespace detail {

/// base^exp as a size, refusing anything above `limit`.
inline std::size_t checked_pow(std::size_t base, std::size_t exp,
                               std::size_t limit = kMaxJointSize) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (result > limit / base) {
      throw CapacityError("dimension " + std::to_string(base) + "^" +
                          std::to_string(exp) + " exceeds " +
                          std::to_string(limit));
    }
    result *= base;
  }
  return result;
}

inline double sum(std::span<const double> p) {
  return std::accumulate(p.begin(), p.end(), 0.0);
}

}  // namespace detail

/// Throws InvalidInput unless `p` is non-negative and sums to one within
/// kTolerance.
inline void validate_distribution(std::span<const double> p) {
  if (p.empty()) throw InvalidInput("empty probability vector");
  for (double x : p) {
    if (!std::isfinite(x) || x < 0.0) {
      throw InvalidInput("probability entries must be finite and non-negative");
    }
  }
  if (std::abs(detail::sum(p) - 1.0) > kTolerance) {
    throw InvalidInput("probability vector is not normalized");
  }
}

/// Energy levels of one subsystem, sorted non-decreasing with a zero ground
/// level.
class EnergySpectrum {
 public:
  explicit EnergySpectrum(std::vector<double> levels) : levels_(std::move(levels)) {
    if (levels_.size() < 2) {
      throw InvalidInput("an energy spectrum needs at least two levels");
    }
    for (double e : levels_) {
      if (!std::isfinite(e)) throw InvalidInput("energy levels must be finite");
    }
    if (levels_.front() != 0.0) {
      throw InvalidInput("the ground level must be zero");
    }
    if (!std::is_sorted(levels_.begin(), levels_.end())) {
      throw InvalidInput("energy levels must be non-decreasing");
    }
  }

  /// Equally spaced levels 0, gap, 2 gap, ...
  static EnergySpectrum ladder(std::size_t dim, double gap = 1.0) {
    std::vector<double> levels(dim);
    for (std::size_t i = 0; i < dim; ++i) levels[i] = gap * static_cast<double>(i);
    return EnergySpectrum(std::move(levels));
  }

  std::span<const double> levels() const { return levels_; }
  std::size_t dim() const { return levels_.size(); }
  double operator[](std::size_t i) const { return levels_[i]; }
  double max_level() const { return levels_.back(); }

  friend bool operator==(const EnergySpectrum&, const EnergySpectrum&) = default;

 private:
  std::vector<double> levels_;
};

/// One collision-model scenario: system and machine spectra, k machines per
/// collision of which `ell` carry memory, inverse temperature beta.
class MemoryConfig {
 public:
  MemoryConfig(EnergySpectrum system, EnergySpectrum machine, int k, int ell,
               double beta)
      : system_(std::move(system)),
        machine_(std::move(machine)),
        k_(k),
        ell_(ell),
        beta_(beta) {
    if (k_ < 1) throw InvalidInput("k must be at least 1");
    if (ell_ < 0 || ell_ >= k_) throw InvalidInput("ell must satisfy 0 <= ell < k");
    if (!std::isfinite(beta_) || beta_ <= 0.0) {
      throw InvalidInput("beta must be positive and finite");
    }
  }

  const EnergySpectrum& system() const { return system_; }
  const EnergySpectrum& machine() const { return machine_; }
  int k() const { return k_; }
  int ell() const { return ell_; }
  double beta() const { return beta_; }

  /// Number of fresh (reset) machines attached per step.
  int resets() const { return k_ - ell_; }

  std::size_t d_s() const { return system_.dim(); }
  std::size_t d_m() const { return machine_.dim(); }
  std::size_t d_l() const { return detail::checked_pow(d_m(), static_cast<std::size_t>(ell_)); }
  std::size_t d_r() const { return detail::checked_pow(d_m(), static_cast<std::size_t>(resets())); }
  std::size_t d_sl() const { return d_s() * d_l(); }

  /// d_M^ell as a real; used by closed forms that never allocate.
  double memory_dimension() const {
    return std::pow(static_cast<double>(d_m()), static_cast<double>(ell_));
  }

  double machine_gap() const { return machine_.max_level(); }

  friend bool operator==(const MemoryConfig&, const MemoryConfig&) = default;

 private:
  EnergySpectrum system_;
  EnergySpectrum machine_;
  int k_;
  int ell_;
  double beta_;
};

/// Probability vector over a product basis. The flat index is lexicographic
/// over `dims`, leftmost factor most significant.
class DiagonalState {
 public:
  DiagonalState(std::vector<double> probs, std::vector<std::size_t> dims)
      : probs_(std::move(probs)), dims_(std::move(dims)) {
    validate_distribution(probs_);
    if (dims_.empty()) throw InvalidInput("dims must not be empty");
    std::size_t total = 1;
    for (std::size_t d : dims_) {
      if (d == 0) throw InvalidInput("factor dimensions must be positive");
      total *= d;
    }
    if (total != probs_.size()) {
      throw InvalidInput("product of dims does not match the number of entries");
    }
  }

  explicit DiagonalState(std::vector<double> probs)
      : DiagonalState(probs, {probs.size()}) {}

  std::span<const double> probs() const { return probs_; }
  std::span<const std::size_t> dims() const { return dims_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

  /// Distribution of a single factor, summing out all others.
  std::vector<double> marginal(std::size_t factor) const {
    if (factor >= dims_.size()) throw InvalidInput("factor index out of range");
    std::size_t inner = 1;
    for (std::size_t f = factor + 1; f < dims_.size(); ++f) inner *= dims_[f];
    const std::size_t d = dims_[factor];
    std::vector<double> out(d, 0.0);
    for (std::size_t i = 0; i < probs_.size(); ++i) out[(i / inner) % d] += probs_[i];
    return out;
  }

 private:
  std::vector<double> probs_;
  std::vector<std::size_t> dims_;
};

inline double partition_function(const EnergySpectrum& spectrum, double beta) {
  double z = 0.0;
  for (double e : spectrum.levels()) z += std::exp(-beta * e);
  return z;
}

/// Gibbs distribution exp(-beta E_i) / Z.
inline DiagonalState thermal_distribution(const EnergySpectrum& spectrum, double beta) {
  if (!std::isfinite(beta) || beta <= 0.0) {
    throw InvalidInput("beta must be positive and finite");
  }
  std::vector<double> p(spectrum.dim());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::exp(-beta * spectrum[i]);
  const double z = detail::sum(p);
  for (double& x : p) x /= z;
  return DiagonalState(std::move(p));
}

/// Geometric sum over d rungs of a ladder with spacing `gap`; depends only on
/// the gap, not on the detailed spectrum.
inline double quasi_partition(std::size_t d, double beta, double gap) {
  if (d < 1) throw InvalidInput("quasi_partition needs d >= 1");
  if (!std::isfinite(beta) || beta <= 0.0 || !std::isfinite(gap)) {
    throw InvalidInput("beta must be positive and gap finite");
  }
  double z = 0.0;
  for (std::size_t n = 0; n < d; ++n) z += std::exp(-beta * static_cast<double>(n) * gap);
  return z;
}

/// Tensor product of diagonal states; dims are concatenated.
inline DiagonalState product_distribution(std::span<const DiagonalState> factors) {
  if (factors.empty()) throw InvalidInput("product of an empty factor list");
  std::vector<double> probs{1.0};
  std::vector<std::size_t> dims;
  for (const DiagonalState& f : factors) {
    std::vector<double> next;
    next.reserve(probs.size() * f.size());
    for (double a : probs) {
      for (double b : f.probs()) next.push_back(a * b);
    }
    probs = std::move(next);
    dims.insert(dims.end(), f.dims().begin(), f.dims().end());
  }
  return DiagonalState(std::move(probs), std::move(dims));
}

/// Thermal state of S followed by `count` thermal machines, as a flat vector.
inline std::vector<double> thermal_product(const EnergySpectrum& system,
                                           const EnergySpectrum& machine,
                                           std::size_t count, double beta) {
  std::vector<DiagonalState> factors;
  factors.push_back(thermal_distribution(system, beta));
  const DiagonalState m = thermal_distribution(machine, beta);
  for (std::size_t i = 0; i < count; ++i) factors.push_back(m);
  const DiagonalState joint = product_distribution(factors);
  return {joint.probs().begin(), joint.probs().end()};
}

/// `count` thermal machines, as a flat vector.
inline std::vector<double> thermal_machines(const EnergySpectrum& machine,
                                            std::size_t count, double beta) {
  const DiagonalState m = thermal_distribution(machine, beta);
  std::vector<double> probs{1.0};
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> next;
    next.reserve(probs.size() * m.size());
    for (double a : probs) {
      for (double b : m.probs()) next.push_back(a * b);
    }
    probs = std::move(next);
  }
  return probs;
}

/// SL product-basis indices ordered by total energy E_mu + sum_j Eps_{nu_j},
/// ties kept in ascending flat index.
inline std::vector<std::size_t> sl_energy_order(const MemoryConfig& config) {
  const std::size_t d_s = config.d_s();
  const std::size_t d_m = config.d_m();
  const std::size_t d_l = config.d_l();
  const auto ell = static_cast<std::size_t>(config.ell());

  // Energies are summed from level occupation counts so that permutations of
  // the same machine levels give bit-identical totals.
  std::vector<double> energy(d_s * d_l);
  std::vector<std::size_t> counts(d_m);
  for (std::size_t nu = 0; nu < d_l; ++nu) {
    std::fill(counts.begin(), counts.end(), 0);
    std::size_t rest = nu;
    for (std::size_t j = 0; j < ell; ++j) {
      ++counts[rest % d_m];
      rest /= d_m;
    }
    double memory_energy = 0.0;
    for (std::size_t i = 0; i < d_m; ++i) {
      memory_energy += static_cast<double>(counts[i]) * config.machine()[i];
    }
    for (std::size_t mu = 0; mu < d_s; ++mu) {
      energy[mu * d_l + nu] = config.system()[mu] + memory_energy;
    }
  }

  std::vector<std::size_t> order(energy.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return energy[a] < energy[b];
  });
  return order;
}

}  // namespace memcool
