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
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "memcool/asymptotics.hpp"
#include "memcool/engine.hpp"
#include "memcool/errors.hpp"
#include "memcool/spectra.hpp"
#include "memcool/trace.hpp"

namespace memcool {

/// Dense column-stochastic matrix acting as p' = T p. Column-major storage.
class TransitionMatrix {
 public:
  explicit TransitionMatrix(std::size_t dim) : dim_(dim) {
    if (dim_ == 0) throw InvalidInput("transition matrix dimension must be positive");
    if (dim_ > kMaxDenseDim) {
      throw CapacityError("dense transition matrix of dimension " + std::to_string(dim_) +
                          " exceeds " + std::to_string(kMaxDenseDim));
    }
    entries_.assign(dim_ * dim_, 0.0);
  }

  /// Takes ownership of column-major entries and checks stochasticity.
  TransitionMatrix(std::size_t dim, std::vector<double> column_major) : TransitionMatrix(dim) {
    if (column_major.size() != dim * dim) throw InvalidInput("entry count is not dim^2");
    entries_ = std::move(column_major);
    validate();
  }

  static TransitionMatrix identity(std::size_t dim) {
    TransitionMatrix t(dim);
    for (std::size_t i = 0; i < dim; ++i) t.at(i, i) = 1.0;
    return t;
  }

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t row, std::size_t col) const { return entries_[col * dim_ + row]; }
  std::span<const double> column(std::size_t col) const {
    return std::span<const double>(entries_).subspan(col * dim_, dim_);
  }

  std::vector<double> apply(std::span<const double> p) const {
    if (p.size() != dim_) throw InvalidInput("vector length does not match matrix dimension");
    std::vector<double> out(dim_, 0.0);
    for (std::size_t c = 0; c < dim_; ++c) {
      const double pc = p[c];
      if (pc == 0.0) continue;
      const double* col = entries_.data() + c * dim_;
      for (std::size_t r = 0; r < dim_; ++r) out[r] += col[r] * pc;
    }
    return out;
  }

  /// Largest |column sum - 1|.
  double column_sum_error() const {
    double worst = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) {
      const auto col = column(c);
      worst = std::max(worst, std::abs(detail::sum(col) - 1.0));
    }
    return worst;
  }

  void validate() const {
    for (double x : entries_) {
      if (!std::isfinite(x) || x < 0.0) throw InvalidInput("negative or non-finite entry");
    }
    if (column_sum_error() > kTolerance) throw InvalidInput("a column does not sum to 1");
  }

  /// alpha * this + (1 - alpha) * identity.
  TransitionMatrix mixed_with_identity(double alpha) const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidInput("alpha must lie in [0, 1]");
    TransitionMatrix t(dim_);
    for (std::size_t i = 0; i < entries_.size(); ++i) t.entries_[i] = alpha * entries_[i];
    for (std::size_t i = 0; i < dim_; ++i) t.at(i, i) += 1.0 - alpha;
    return t;
  }

 private:
  double& at(std::size_t row, std::size_t col) { return entries_[col * dim_ + row]; }

  friend TransitionMatrix build_v_matrix(std::size_t, double, double);

  std::size_t dim_;
  std::vector<double> entries_;
};

/// SL-level action of swapping |q, top_R> <-> |q+1, 0_R> for all q, with
/// the reset pair split by a gap eps.
inline TransitionMatrix build_v_matrix(std::size_t dim, double eps, double beta) {
  if (dim < 2) throw InvalidInput("V matrix needs dimension >= 2");
  if (!(eps > 0.0) || !(beta > 0.0)) throw InvalidInput("eps and beta must be positive");
  const double boltzmann = std::exp(-beta * eps);
  const double norm = 1.0 / (1.0 + boltzmann);
  TransitionMatrix v(dim);
  v.at(0, 0) = norm;
  for (std::size_t r = 0; r + 1 < dim; ++r) {
    v.at(r, r + 1) = norm;
    v.at(r + 1, r) = boltzmann * norm;
  }
  v.at(dim - 1, dim - 1) = boltzmann * norm;
  return v;
}

/// Reset gap (k - ell) Eps_max seen by the swap protocol.
inline double reset_gap(const MemoryConfig& config) {
  return config.resets() * config.machine_gap();
}

/// Weight of the two-level reset subspace {|0>, |top>} in the thermal reset
/// state: (1 + e^{-beta eps}) / Z_M^{k-ell}.
inline double alpha_kl(const MemoryConfig& config) {
  const double z_m = partition_function(config.machine(), config.beta());
  return (1.0 + std::exp(-config.beta() * reset_gap(config))) /
         std::pow(z_m, static_cast<double>(config.resets()));
}

inline TransitionMatrix build_transition(const MemoryConfig& config) {
  return build_v_matrix(config.d_sl(), reset_gap(config), config.beta())
      .mixed_with_identity(alpha_kl(config));
}

/// Eigenvalues lambda_q = alpha nu_q + 1 - alpha of the transition matrix,
/// q = 0 .. D-1, from the closed form for nu_q.
inline std::vector<double> chain_spectrum(const MemoryConfig& config) {
  const std::size_t dim = config.d_sl();
  const double be = config.beta() * reset_gap(config);
  const double alpha = alpha_kl(config);
  std::vector<double> lambda(dim);
  lambda[0] = 1.0;
  for (std::size_t q = 1; q < dim; ++q) {
    const double nu = 2.0 * std::exp(-be / 2.0) *
                      std::cos(static_cast<double>(q) * std::numbers::pi / static_cast<double>(dim)) /
                      (1.0 + std::exp(-be));
    lambda[q] = alpha * nu + (1.0 - alpha);
  }
  return lambda;
}

/// lambda_0 - lambda_1 from the closed form.
inline double spectral_gap(const MemoryConfig& config) {
  const std::vector<double> lambda = chain_spectrum(config);
  return lambda[0] - lambda[1];
}

/// Lower bound (1 - e^{-beta eps / 2})^2 / Z_M^{k-ell} on the spectral gap.
inline double spectral_gap_bound(const MemoryConfig& config) {
  const double be = config.beta() * reset_gap(config);
  const double z_m = partition_function(config.machine(), config.beta());
  const double root = 1.0 - std::exp(-be / 2.0);
  return root * root / std::pow(z_m, static_cast<double>(config.resets()));
}

struct MixingTimeBound {
  double steps;
  bool clamped;  // the raw expression was negative and has been set to 0
};

/// Upper bound on the steps needed to come within eta of the fixed point.
inline MixingTimeBound mixing_time_bound(const MemoryConfig& config, double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) throw InvalidInput("eta must be positive");
  const double be = config.beta() * reset_gap(config);
  const double dim = static_cast<double>(config.d_sl());
  const double leading = rho_star_SL(config).front();
  const double raw = (1.0 / spectral_gap_bound(config)) *
                     std::log(1.0 / (eta * leading * std::exp(-be * (dim - 1.0))));
  if (raw <= 0.0) return {0.0, true};
  return {raw, false};
}

struct FixedPoint {
  std::vector<double> probs;
  long iterations;
  bool converged;
};

/// Iterates p <- T p until successive iterates are within `tolerance` in
/// total variation.
inline FixedPoint power_iteration_fixed_point(const TransitionMatrix& t,
                                              std::span<const double> start,
                                              double tolerance = 1e-13,
                                              long max_iterations = 100'000) {
  std::vector<double> p(start.begin(), start.end());
  for (long it = 1; it <= max_iterations; ++it) {
    std::vector<double> next = t.apply(p);
    double tv = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) tv += std::abs(next[i] - p[i]);
    p = std::move(next);
    if (0.5 * tv <= tolerance) return {std::move(p), it, true};
  }
  return {std::move(p), max_iterations, false};
}

/// Repeats the fixed swap protocol `steps` times from the thermal SL state.
inline ProtocolTrace iterate_chain(const MemoryConfig& config, int steps) {
  detail::check_run_capacity(config, steps);
  const TransitionMatrix t = build_transition(config);
  ProtocolTrace trace{config, Strategy::nonadaptive,
                      thermal_product(config.system(), config.machine(),
                                      static_cast<std::size_t>(config.ell()), config.beta()),
                      {}};
  trace.steps.reserve(static_cast<std::size_t>(steps));
  std::vector<double> sl = trace.initial_sl;
  for (int n = 1; n <= steps; ++n) {
    sl = t.apply(sl);
    trace.record(n, sl);
  }
  return trace;
}

/// One step of the swap protocol carried out on the full S-L-R joint: attach
/// the resets, exchange |q, top_R> with |q+1, 0_R>, trace out R.
inline std::vector<double> neighbour_swap_step(std::span<const double> sl,
                                               std::span<const double> resets,
                                               std::size_t d_s, std::size_t d_l) {
  JointDistribution joint = attach_fresh_machines(sl, resets, d_s, d_l);
  const std::size_t d_r = joint.d_r;
  for (std::size_t q = 0; q + 1 < joint.d_sl(); ++q) {
    std::swap(joint.probs[q * d_r + (d_r - 1)], joint.probs[(q + 1) * d_r]);
  }
  return joint.trace_out_resets();
}

}  // namespace memcool
