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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "memcool/spectra.hpp"
#include "oracles.hpp"

namespace memcool {
namespace {

EnergySpectrum qubit(double gap) { return EnergySpectrum({0.0, gap}); }

std::vector<double> thermal(const EnergySpectrum& s, double beta) {
  const DiagonalState state = thermal_distribution(s, beta);
  return {state.probs().begin(), state.probs().end()};
}

TEST(EnergySpectrum, RejectsMalformedLevels) {
  EXPECT_THROW(EnergySpectrum({0.0}), InvalidInput);
  EXPECT_THROW(EnergySpectrum({0.5, 1.0}), InvalidInput);
  EXPECT_THROW(EnergySpectrum({0.0, 2.0, 1.0}), InvalidInput);
  EXPECT_THROW(EnergySpectrum({0.0, NAN}), InvalidInput);
  EXPECT_THROW(EnergySpectrum({0.0, INFINITY}), InvalidInput);
  EXPECT_NO_THROW(EnergySpectrum({0.0, 0.0, 1.0}));
}

TEST(EnergySpectrum, Ladder) {
  const EnergySpectrum s = EnergySpectrum::ladder(4, 0.5);
  EXPECT_EQ(s.dim(), 4u);
  EXPECT_DOUBLE_EQ(s[3], 1.5);
  EXPECT_DOUBLE_EQ(s.max_level(), 1.5);
}

TEST(MemoryConfig, ValidatesCounts) {
  const EnergySpectrum s = qubit(1.0);
  const EnergySpectrum m = qubit(2.0);
  EXPECT_THROW(MemoryConfig(s, m, 0, 0, 0.2), InvalidInput);
  EXPECT_THROW(MemoryConfig(s, m, 2, 2, 0.2), InvalidInput);
  EXPECT_THROW(MemoryConfig(s, m, 2, -1, 0.2), InvalidInput);
  EXPECT_THROW(MemoryConfig(s, m, 2, 1, 0.0), InvalidInput);
  EXPECT_THROW(MemoryConfig(s, m, 2, 1, -1.0), InvalidInput);
  EXPECT_THROW(MemoryConfig(s, m, 2, 1, NAN), InvalidInput);

  const MemoryConfig c(s, EnergySpectrum({0.0, 0.5, 1.2}), 5, 3, 0.2);
  EXPECT_EQ(c.d_l(), 27u);
  EXPECT_EQ(c.d_r(), 9u);
  EXPECT_EQ(c.d_sl(), 54u);
  EXPECT_EQ(c.resets(), 2);
  EXPECT_DOUBLE_EQ(c.machine_gap(), 1.2);
}

TEST(MemoryConfig, HugeMemoryIsCapacityError) {
  const MemoryConfig c(qubit(1.0), qubit(2.0), 80, 70, 0.2);
  EXPECT_THROW((void)c.d_sl(), CapacityError);
  EXPECT_DOUBLE_EQ(c.memory_dimension(), std::pow(2.0, 70));
}

TEST(Thermal, FrozenValues) {
  const auto s = thermal(qubit(1.0), 0.2);
  EXPECT_NEAR(s[0], 0.549833997312478, 1e-12);
  EXPECT_NEAR(s[1], 0.450166002687522, 1e-12);
  const auto m = thermal(qubit(2.0), 0.2);
  EXPECT_NEAR(m[0], 0.598687660112452, 1e-12);
  EXPECT_NEAR(m[1], 0.401312339887548, 1e-12);
}

TEST(Thermal, MatchesLongDoubleOracleOnRandomSpectra) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> gap(0.0, 3.0);
  std::uniform_real_distribution<double> beta(0.01, 5.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 2 + rng() % 6;
    std::vector<double> levels{0.0};
    std::vector<long double> levels_ld{0.0L};
    for (std::size_t i = 1; i < d; ++i) {
      levels.push_back(levels.back() + gap(rng));
      levels_ld.push_back(static_cast<long double>(levels.back()));
    }
    const double b = beta(rng);
    const auto p = thermal(EnergySpectrum(levels), b);
    const auto q = oracle::thermal_ld(levels_ld, b);
    for (std::size_t i = 0; i < d; ++i) {
      EXPECT_NEAR(p[i], static_cast<double>(q[i]), 1e-14);
    }
    // Detailed balance between neighbours.
    for (std::size_t i = 1; i < d; ++i) {
      EXPECT_NEAR(p[i] / p[i - 1], std::exp(-b * (levels[i] - levels[i - 1])), 1e-12);
    }
  }
}

TEST(Thermal, DegenerateLevelsShareWeight) {
  const auto p = thermal(EnergySpectrum({0.0, 1.0, 1.0}), 0.7);
  EXPECT_DOUBLE_EQ(p[1], p[2]);
}

TEST(PartitionFunction, QuasiPartitionFrozen) {
  EXPECT_NEAR(quasi_partition(2, 0.2, 2.0), 1.67032004603564, 1e-12);
  EXPECT_NEAR(quasi_partition(3, 0.2, 2.0 * 2.0), 1.65122548211188, 1e-12);
  EXPECT_DOUBLE_EQ(quasi_partition(1, 0.2, 2.0), 1.0);
  EXPECT_NEAR(partition_function(qubit(2.0), 0.2), 1.0 + std::exp(-0.4), 1e-15);
}

TEST(ProductDistribution, ThermalProductEntry) {
  const auto joint = thermal_product(qubit(1.0), qubit(2.0), 2, 0.2);
  ASSERT_EQ(joint.size(), 8u);
  EXPECT_NEAR(joint[0], 0.197075303072942, 1e-12);
  const auto oracle = oracle::kron({thermal(qubit(1.0), 0.2),
                                    thermal(qubit(2.0), 0.2),
                                    thermal(qubit(2.0), 0.2)});
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(joint[i], oracle[i], 1e-15);
}

TEST(ProductDistribution, MarginalsRecoverFactors) {
  const DiagonalState a({0.7, 0.3});
  const DiagonalState b({0.5, 0.25, 0.25});
  const std::vector<DiagonalState> factors{a, b};
  const DiagonalState ab = product_distribution(factors);
  EXPECT_EQ(ab.probs().size(), 6u);
  const auto ma = ab.marginal(0);
  const auto mb = ab.marginal(1);
  EXPECT_NEAR(ma[0], 0.7, 1e-15);
  EXPECT_NEAR(mb[1], 0.25, 1e-15);
  EXPECT_THROW((void)ab.marginal(2), InvalidInput);
}

TEST(DiagonalState, ValidatesNormalization) {
  EXPECT_THROW(DiagonalState({0.5, 0.4}), InvalidInput);
  EXPECT_THROW(DiagonalState({1.1, -0.1}), InvalidInput);
  EXPECT_THROW(DiagonalState({0.5, 0.5}, {3}), InvalidInput);
}

TEST(SlEnergyOrder, QubitMemoryOrdersByExcitationCount) {
  // d_S = 2 unit gap, one qubit memory with gap 2: energies 0,2,1,3.
  const MemoryConfig c(qubit(1.0), qubit(2.0), 2, 1, 0.2);
  const auto order = sl_energy_order(c);
  EXPECT_EQ(order, (std::vector<std::size_t>{0, 2, 1, 3}));
}

TEST(SlEnergyOrder, TiesKeepIndexOrder) {
  const MemoryConfig c(qubit(2.0), qubit(2.0), 2, 1, 0.2);
  EXPECT_EQ(sl_energy_order(c), (std::vector<std::size_t>{0, 1, 2, 3}));
}

}  // namespace
}  // namespace memcool
