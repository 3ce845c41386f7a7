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

#include <sstream>
#include <string>
#include <vector>

#include "memcool/analysis.hpp"
#include "memcool/io.hpp"

namespace memcool {
namespace {

const MemoryConfig kConfig(EnergySpectrum({0.0, 1.0}), EnergySpectrum({0.0, 2.0}), 2, 1, 0.2);

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

TEST(Io, FormatNumber) {
  EXPECT_EQ(io::format_number(0.5), "0.5");
  EXPECT_EQ(io::format_number(0.622633966827607), "0.622633966828");
  EXPECT_EQ(io::format_number(1e-20), "1e-20");
  EXPECT_EQ(io::format_number(0.0), "0");
}

TEST(Io, TraceCsv) {
  const ProtocolTrace trace = simulate(kConfig, 3, Strategy::stepwise);
  std::ostringstream os;
  io::write_trace_csv(os, trace);
  const auto rows = lines(os.str());
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "step,m,s_ground,mutual_info");
  EXPECT_EQ(rows[1].rfind("1,2,0.622633966828,", 0), 0u);
  EXPECT_EQ(rows[3].rfind("3,4,", 0), 0u);
}

TEST(Io, TraceCsvWithSl) {
  const ProtocolTrace trace = simulate(kConfig, 1, Strategy::stepwise);
  std::ostringstream os;
  io::write_trace_csv(os, trace, true);
  const auto rows = lines(os.str());
  EXPECT_EQ(rows[0], "step,m,s_ground,mutual_info,sl_0,sl_1,sl_2,sl_3");
  EXPECT_NE(rows[1].find(",0.358426914371,0.264207052457,0.216314439026,0.161051594146"),
            std::string::npos);
}

TEST(Io, CsvIsDeterministic) {
  std::ostringstream a;
  std::ostringstream b;
  io::write_trace_csv(a, simulate(kConfig, 25, Strategy::global), true);
  io::write_trace_csv(b, simulate(kConfig, 25, Strategy::global), true);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Io, GridCsv) {
  const std::vector<MemoryConfig> configs{kConfig};
  const std::vector<long long> budgets{2, 3};
  std::ostringstream os;
  io::write_grid_csv(os, budget_grid(configs, budgets, Strategy::stepwise));
  const auto rows = lines(os.str());
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], "k,l,m,s_ground");
  EXPECT_EQ(rows[1], "2,1,2,0.622633966828");
}

TEST(Io, SummaryJson) {
  const auto bare = io::summary_json(kConfig);
  EXPECT_TRUE(bare["final_s_ground"].is_null());
  EXPECT_NEAR(bare["p_star"].get<double>(), 0.689974481127612, 1e-15);
  EXPECT_TRUE(bare["attainable"].get<bool>());
  EXPECT_EQ(bare["config"]["k"], 2);
  EXPECT_EQ(bare["config"]["machine_levels"], (std::vector<double>{0.0, 2.0}));

  const ProtocolTrace trace = simulate(kConfig, 2, Strategy::stepwise);
  const auto full = io::summary_json(kConfig, &trace);
  EXPECT_DOUBLE_EQ(full["final_s_ground"].get<double>(), trace.final().s_ground);
  // Round trip through text keeps every bit.
  const auto parsed = nlohmann::json::parse(full.dump());
  EXPECT_EQ(parsed["hierarchy_exponent"].get<double>(), hierarchy_exponent(kConfig));
}

}  // namespace
}  // namespace memcool
