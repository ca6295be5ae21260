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

// Command-line front end: evaluate one state or run an ensemble experiment.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 state file parse error,
// 3 matrix is not a valid density matrix.

#include <fmt/format.h>

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qdiscord/discord.hpp"
#include "qdiscord/experiments.hpp"
#include "qdiscord/state_io.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInvalidState = 3;

void parse_bins(const std::string& spec, qdiscord::ExperimentConfig& config) {
  const auto x = spec.find_first_of("xX");
  if (x == std::string::npos) throw CLI::ValidationError("--bins", "expected THETAxPHI, e.g. 100x100");
  try {
    config.theta_bins = std::stoi(spec.substr(0, x));
    config.phi_bins = std::stoi(spec.substr(x + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--bins", "expected THETAxPHI, e.g. 100x100");
  }
}

void emit(const std::string& out_path, const std::string& contents) {
  if (out_path.empty()) {
    std::fwrite(contents.data(), 1, contents.size(), stdout);
  } else {
    qdiscord::write_file_atomically(out_path, contents);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum discord and MCDM-based discord for two-qubit states"};
  app.require_subcommand(1);

  qdiscord::ExperimentConfig config;
  std::string bins = "100x100";
  std::string out_path;
  bool json = false;
  std::string state_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "Output path (default: stdout)");
  };
  auto add_experiment = [&](CLI::App* cmd) {
    add_common(cmd);
    cmd->add_option("--samples", config.samples, "Number of random states")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", config.seed, "Random seed");
    cmd->add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* discord = app.add_subcommand("discord", "Correlation report for one state file");
  discord->add_option("statefile", state_path, "4x4 density matrix, one row per line")->required();
  discord->add_flag("--json", json, "Machine-readable report");
  add_common(discord);

  auto* table1 = app.add_subcommand("table1", "Optimal-direction clusters for random X-states");
  add_experiment(table1);
  table1->add_option("--cluster-tol", config.cluster_tolerance,
                     "Clustering radius in units of pi")->check(CLI::PositiveNumber);

  auto* histogram = app.add_subcommand("histogram", "(theta, phi) histogram of optimal directions");
  add_experiment(histogram);
  histogram->add_option("--bins", bins, "Histogram resolution THETAxPHI");

  auto* mixture = app.add_subcommand("mixture", "Discord and MCDM discord along the mixture family");
  add_common(mixture);
  mixture->add_option("--points", config.q_points, "Number of q values in [0, 1]");
  mixture->add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);

  auto* scatter = app.add_subcommand("scatter", "(D, MCDM D) pairs for random states");
  add_experiment(scatter);

  try {
    app.parse(argc, argv);
    if (histogram->parsed()) parse_bins(bins, config);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (discord->parsed()) {
      qdiscord::TwoQubitState rho = qdiscord::load_state_file(state_path);
      const auto report = qdiscord::quantum_discord(rho);
      emit(out_path, json ? qdiscord::format_report_json(report) : qdiscord::format_report_text(report));
    } else if (table1->parsed()) {
      emit(out_path, qdiscord::table1_csv(qdiscord::run_table1(config), config.cluster_tolerance));
    } else if (histogram->parsed()) {
      emit(out_path, qdiscord::histogram_csv(qdiscord::run_histogram(config)));
    } else if (mixture->parsed()) {
      emit(out_path, qdiscord::mixture_csv(qdiscord::run_mixture(config)));
    } else if (scatter->parsed()) {
      emit(out_path, qdiscord::scatter_csv(qdiscord::run_scatter(config)));
    }
  } catch (const qdiscord::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const qdiscord::ValidationError& e) {
    // Structural problems with a state file (non-Hermitian, trace, positivity)
    // all mean "not a density matrix"; config problems are usage errors.
    std::cerr << "invalid input: " << e.what() << "\n";
    return discord->parsed() ? kExitInvalidState : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
