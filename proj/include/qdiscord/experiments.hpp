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

#pragma once

#include <cstdint>
#include <exception>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "qdiscord/direction.hpp"
#include "qdiscord/discord.hpp"

/// Ensemble experiments over random two-qubit states.
///
/// Sample i always draws from generator stream i of the configured seed, and
/// results are stored by index, so every output depends only on the config
/// and never on the worker count.
namespace qdiscord {

struct ExperimentConfig {
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  /// Histogram resolution over theta in [0, pi) and phi in [-pi/2, pi/2).
  int theta_bins = 100;
  int phi_bins = 100;
  unsigned workers = 1;
  /// Axis-angle radius (units of pi) for grouping optimal directions.
  double cluster_tolerance = 0.01;
  /// Number of evenly spaced q values in [0, 1] for the mixture curve.
  int q_points = 101;
  OptimizerOptions optimizer;
};

/// Throws ValidationError on non-positive counts or tolerances.
void validate(const ExperimentConfig& config);

/// Calls fn(i) for i in [0, count), striding indices over `workers` threads.
/// The first exception thrown by any call is rethrown after all threads join.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn);

/// Optimal measurement (closest to the MCDM among ties) of the canonical form
/// of sample `index`. With `x_states`, the sample is first projected onto the
/// X-state subspace.
MeasurementDirection canonical_optimal_direction(const ExperimentConfig& config, std::size_t index,
                                                 bool x_states);

struct DirectionCluster {
  MeasurementDirection representative;  // first member in sample order
  std::size_t count = 0;
  double percentage = 0.0;
};

/// Greedy clustering in input order: each direction joins the first cluster
/// whose representative axis lies within `tolerance_radians`. Sorted by
/// descending count, ties by first appearance.
std::vector<DirectionCluster> cluster_directions(std::span<const MeasurementDirection> directions,
                                                 double tolerance_radians);

std::vector<DirectionCluster> run_table1(const ExperimentConfig& config);
/// (theta, phi) in units of pi. Directions within `tolerance_over_pi` of the
/// phi = +pi/2 seam are reported as the equivalent (pi - theta, phi - pi).
std::pair<double, double> seam_wrapped_angles(const MeasurementDirection& n, double tolerance_over_pi);

std::string table1_csv(std::span<const DirectionCluster> clusters, double tolerance_over_pi = 0.01);

struct DirectionHistogram {
  int theta_bins = 0;
  int phi_bins = 0;
  std::vector<std::size_t> counts;  // row-major [theta][phi]

  std::size_t at(int t, int p) const { return counts[static_cast<std::size_t>(t) * phi_bins + p]; }
  std::size_t total() const;
};

/// Bin (theta, phi) of a direction in its hemisphere chart.
std::pair<int, int> histogram_bin(const MeasurementDirection& n, int theta_bins, int phi_bins);

DirectionHistogram run_histogram(const ExperimentConfig& config);
std::string histogram_csv(const DirectionHistogram& histogram);

struct MixturePoint {
  double q = 0.0;
  double discord = 0.0;
  double mcdm_discord = 0.0;
};

std::vector<MixturePoint> run_mixture(const ExperimentConfig& config);
std::string mixture_csv(std::span<const MixturePoint> points);

struct ScatterResult {
  std::vector<double> discord;
  std::vector<double> mcdm_discord;
  /// avg[(mcdm_discord - discord)^2]
  double mean_square_gap = 0.0;
};

ScatterResult run_scatter(const ExperimentConfig& config);
std::string scatter_csv(const ScatterResult& result);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace qdiscord
