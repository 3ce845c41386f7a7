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
#include <functional>
#include <span>
#include <vector>

#include "memcool/errors.hpp"
#include "memcool/spectra.hpp"

namespace memcool {

/// Copy of `p` in non-increasing order. Stable, so equal entries keep their
/// input order.
inline std::vector<double> sorted_descending(std::span<const double> p) {
  std::vector<double> out(p.begin(), p.end());
  std::stable_sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// True iff a ≺ b: every descending partial sum of b dominates that of a,
/// up to kTolerance.
inline bool is_majorized_by(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidInput("majorization needs equal lengths");
  validate_distribution(a);
  validate_distribution(b);
  const std::vector<double> as = sorted_descending(a);
  const std::vector<double> bs = sorted_descending(b);
  double sum_a = 0.0;
  double sum_b = 0.0;
  for (std::size_t i = 0; i < as.size(); ++i) {
    sum_a += as[i];
    sum_b += bs[i];
    if (sum_a > sum_b + kTolerance) return false;
  }
  return true;
}

/// Coldest reachable A-marginal of a bipartite diagonal state under
/// permutations of the joint: the i-th entry collects the i-th block of d_B
/// largest joint entries.
inline std::vector<double> optimal_marginal(std::span<const double> joint,
                                            std::size_t d_a, std::size_t d_b) {
  if (d_a * d_b != joint.size()) {
    throw InvalidInput("joint size does not match d_A * d_B");
  }
  validate_distribution(joint);
  const std::vector<double> sorted = sorted_descending(joint);
  std::vector<double> out(d_a, 0.0);
  for (std::size_t i = 0; i < d_a; ++i) {
    for (std::size_t j = 0; j < d_b; ++j) out[i] += sorted[i * d_b + j];
  }
  return out;
}

inline std::vector<double> optimal_marginal(const DiagonalState& joint) {
  if (joint.dims().size() != 2) throw InvalidInput("optimal_marginal needs a bipartite state");
  return optimal_marginal(joint.probs(), joint.dims()[0], joint.dims()[1]);
}

/// Schur-convex and Schur-concave summaries of a population vector.
struct MetricBundle {
  double ground_population;
  double shannon_entropy;  // nats
  double purity;
  double mean_energy;
};

inline MetricBundle coolness_metrics(std::span<const double> p,
                                     const EnergySpectrum& spectrum) {
  if (p.size() != spectrum.dim()) {
    throw InvalidInput("population vector and spectrum differ in length");
  }
  MetricBundle m{p[0], 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) m.shannon_entropy -= p[i] * std::log(p[i]);
    m.purity += p[i] * p[i];
    m.mean_energy += p[i] * spectrum[i];
  }
  return m;
}

}  // namespace memcool
