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

// Runs the installed binary end to end and checks exit codes and outputs.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(MEMCOOL_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("memcool_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

const std::string kQubits = "--ds 2 --machine-levels 0,2 --beta 0.2";

TEST_F(Cli, BoundPrintsPStar) {
  const Result r = run(kQubits + " --k 2 --l 1 bound");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("p_star             0.689974481128"), std::string::npos);
  EXPECT_NE(r.out.find("attainable         true"), std::string::npos);
}

TEST_F(Cli, MachineGapShorthand) {
  const Result a = run("--ds 2 --machine-gap 2 --beta 0.2 --k 3 --l 2 bound");
  const Result b = run(kQubits + " --k 3 --l 2 bound");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(Cli, SingleStepMemoryless) {
  const Result r = run(kQubits + " --k 1 --l 0 simulate --steps 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "step,m,s_ground,mutual_info\n1,1,0.598687660112,0\n");
}

TEST_F(Cli, CsvFileIsByteIdenticalAcrossRuns) {
  const fs::path a = dir_ / "a.csv";
  const fs::path b = dir_ / "b.csv";
  const std::string base = kQubits + " --k 3 --l 2 simulate --steps 40 --dump-sl --out ";
  ASSERT_EQ(run(base + a.string()).code, 0);
  ASSERT_EQ(run(base + b.string()).code, 0);
  EXPECT_FALSE(slurp(a).empty());
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(slurp(a), run(kQubits + " --k 3 --l 2 simulate --steps 40 --dump-sl").out);
}

TEST_F(Cli, JsonSummary) {
  const fs::path j = dir_ / "s.json";
  ASSERT_EQ(run(kQubits + " --k 2 --l 1 --json " + j.string() + " simulate --steps 2 --out " +
                (dir_ / "t.csv").string())
                .code,
            0);
  const std::string text = slurp(j);
  EXPECT_NE(text.find("\"final_s_ground\": 0.6461092017"), std::string::npos);
  EXPECT_NE(text.find("\"p_star\""), std::string::npos);
}

TEST_F(Cli, CompareGrid) {
  const Result r = run(kQubits + " compare --budget-max 3 --kmax 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "k,l,m,s_ground\n"
            "1,0,1,0.598687660112\n1,0,2,0.598687660112\n1,0,3,0.598687660112\n"
            "2,0,2,0.622633966828\n"
            "2,1,2,0.622633966828\n2,1,3,0.646109201741\n");
}

TEST_F(Cli, CompareBelowEveryBudgetIsEmpty) {
  const Result r = run(kQubits + " compare --budget-min 1 --budget-max 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k,l,m,s_ground\n");
}

TEST_F(Cli, Witness) {
  const Result r = run(kQubits + " --k 2 --l 1 witness --t 1 --n 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("s_level_deviation  0.133797598765  markovian false"), std::string::npos);
  EXPECT_NE(r.out.find("markovian true"), std::string::npos);
}

TEST_F(Cli, ConfigFileWithOverride) {
  const fs::path conf = dir_ / "scenario.conf";
  std::ofstream(conf) << "# qubit scenario\nds = 2\nmachine-levels = 0,2\nk = 2\nl = 1\nbeta = 0.2\n";
  const Result from_file = run("--config " + conf.string() + " bound");
  EXPECT_EQ(from_file.code, 0);
  EXPECT_EQ(from_file.out, run(kQubits + " --k 2 --l 1 bound").out);
  const Result overridden = run("--config " + conf.string() + " --k 1 --l 0 bound");
  EXPECT_NE(overridden.out.find("p_star             0.598687660112"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run(kQubits + " --k 2 --l 1 simulate").code, 2);
  EXPECT_EQ(run(kQubits + " --l 1 bound").code, 2);
  EXPECT_EQ(run(kQubits + " --k 2 --l 1 simulate --steps 3 --mode sideways").code, 2);
  EXPECT_EQ(run(kQubits + " --k 2 --l 2 bound").code, 2);
  EXPECT_EQ(run("--ds 2 --machine-levels 0,2 --beta -1 --k 2 --l 1 bound").code, 2);
  EXPECT_EQ(run(kQubits + " --machine-gap 2 --k 2 --l 1 bound").code, 2);
  EXPECT_EQ(run(kQubits + " --k 2 --l 1 witness --t 2 --n 2").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, IoErrors) {
  EXPECT_EQ(run(kQubits + " --k 2 --l 1 simulate --steps 2 --out " +
                (dir_ / "missing" / "x.csv").string())
                .code,
            3);
  EXPECT_EQ(run("--config " + (dir_ / "absent.conf").string() + " bound").code, 3);
}

TEST_F(Cli, CapacityRefusal) {
  EXPECT_EQ(run(kQubits + " --k 30 --l 1 simulate --steps 2").code, 4);
  EXPECT_EQ(run(kQubits + " --k 14 --l 13 simulate --steps 2 --mode nonadaptive").code, 4);
}

}  // namespace
