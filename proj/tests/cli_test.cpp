// Copyright 2026 The qdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end checks of the qdiscord executable: output contents and exit codes.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(QDISCORD_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qdiscord_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

constexpr const char* kBell = "0 0 0 0\n0 0.5 0.5 0\n0 0.5 0.5 0\n0 0 0 0\n";
constexpr const char* kProduct = "0.63 0 0 0\n0 0.27 0 0\n0 0 0.07 0\n0 0 0 0.03\n";  // (0.9,0.1)(x)(0.7,0.3)
constexpr const char* kCounterexample =
    "0.0783 0 0 0\n"
    "0 0.1250 0.1000 0\n"
    "0 0.1000 0.1250 0\n"
    "0 0 0 0.6717\n";

TEST_F(CliTest, BellStateReport) {
  const auto r = run("discord --json " + file("bell.txt", kBell));
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["mutual_information"].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(j["classical_correlation"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(j["discord"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(j["mcdm_discord"].get<double>(), 1.0, 1e-12);
}

TEST_F(CliTest, ProductStateReportsZeros) {
  const auto r = run("discord --json " + file("product.txt", kProduct));
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"mutual_information", "classical_correlation", "discord", "mcdm_discord"}) {
    EXPECT_NEAR(j[key].get<double>(), 0.0, 1e-12) << key;
  }
}

TEST_F(CliTest, CounterexampleOptimalPolarAngle) {
  const auto r = run("discord --json " + file("anti.txt", kCounterexample));
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const double nz = j["optimal_direction"][2].get<double>();
  EXPECT_NEAR(std::acos(std::abs(nz)) / std::numbers::pi, 0.155, 0.01);
  EXPECT_GT(j["mcdm_discord"].get<double>(), j["discord"].get<double>());
}

TEST_F(CliTest, TextReportAndOutFile) {
  const std::string out = (dir_ / "report.txt").string();
  const auto r = run("discord " + file("bell.txt", kBell) + " --out " + out);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  std::stringstream s;
  s << in.rdbuf();
  EXPECT_NE(s.str().find("discord                   1\n"), std::string::npos) << s.str();
}

TEST_F(CliTest, ParseErrorExitsTwo) {
  EXPECT_EQ(run("discord " + file("bad.txt", "1 0 0 0\n0 0 zz 0\n0 0 0 0\n0 0 0 0\n")).exit_code, 2);
  EXPECT_EQ(run("discord " + file("short.txt", "1 0 0 0\n")).exit_code, 2);
}

TEST_F(CliTest, InvalidStateExitsThree) {
  EXPECT_EQ(run("discord " + file("neg.txt", "0.6 0 0 0\n0 0.6 0 0\n0 0 -0.2 0\n0 0 0 0\n")).exit_code, 3);
  EXPECT_EQ(run("discord " + file("trace.txt", "1 0 0 0\n0 1 0 0\n0 0 0 0\n0 0 0 0\n")).exit_code, 3);
  EXPECT_EQ(run("discord " + file("skew.txt", "0.5 0.1 0 0\n0 0.5 0 0\n0 0 0 0\n0 0 0 0\n")).exit_code, 3);
}

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(run("").exit_code, 1);
  EXPECT_EQ(run("discord " + (dir_ / "missing.txt").string()).exit_code, 1);
  EXPECT_EQ(run("table1 --samples 0").exit_code, 1);
  EXPECT_EQ(run("histogram --samples 2 --bins 10by10").exit_code, 1);
  EXPECT_EQ(run("frobnicate").exit_code, 1);
  EXPECT_EQ(run("--help").exit_code, 0);
}

TEST_F(CliTest, Table1IsWorkerIndependent) {
  const auto a = run("table1 --samples 60 --seed 7 --workers 1");
  const auto b = run("table1 --samples 60 --seed 7 --workers 4");
  ASSERT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("theta_over_pi,phi_over_pi,count,percentage\n", 0), 0u);
}

TEST_F(CliTest, HistogramBinsFlag) {
  const auto r = run("histogram --samples 5 --bins 10x5");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 50);
}

TEST_F(CliTest, MixtureAndScatter) {
  const auto m = run("mixture --points 3");
  ASSERT_EQ(m.exit_code, 0);
  EXPECT_EQ(m.out.substr(0, m.out.find('\n')), "q,discord,mcdm_discord");
  EXPECT_EQ(std::count(m.out.begin(), m.out.end(), '\n'), 4);
  const auto s = run("scatter --samples 10 --seed 3");
  ASSERT_EQ(s.exit_code, 0);
  EXPECT_NE(s.out.find("\n# mean_square_gap,"), std::string::npos);
}

}  // namespace
