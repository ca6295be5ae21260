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

#include "qdiscord/experiments.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qdiscord/errors.hpp"

namespace qdiscord {
namespace {

constexpr double kPi = std::numbers::pi;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Validate, RejectsDegenerateConfigs) {
  ExperimentConfig c;
  EXPECT_NO_THROW(validate(c));
  c.samples = 0;
  EXPECT_THROW(validate(c), ValidationError);
  c = {};
  c.workers = 0;
  EXPECT_THROW(validate(c), ValidationError);
  c = {};
  c.theta_bins = 0;
  EXPECT_THROW(validate(c), ValidationError);
  c = {};
  c.cluster_tolerance = 0.0;
  EXPECT_THROW(validate(c), ValidationError);
  c = {};
  c.q_points = 1;
  EXPECT_THROW(validate(c), ValidationError);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(ParallelFor, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(100, 3,
                            [](std::size_t i) {
                              if (i == 57) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

TEST(ClusterDirections, GroupsAxesWithinTolerance) {
  const double tol = 0.01 * kPi;
  const std::vector<MeasurementDirection> dirs = {
      MeasurementDirection::x_axis(),
      MeasurementDirection::from_angles(kPi / 2, 0.005 * kPi),
      MeasurementDirection({-1, 0, 0}),
      MeasurementDirection({0, 1, 0}),
      MeasurementDirection::from_angles(kPi / 2, 0.02 * kPi),
  };
  const auto clusters = cluster_directions(dirs, tol);
  ASSERT_EQ(clusters.size(), 3u);
  EXPECT_EQ(clusters[0].count, 3u);
  EXPECT_DOUBLE_EQ(clusters[0].percentage, 60.0);
  EXPECT_LT(axis_angle(clusters[0].representative, MeasurementDirection::x_axis()), 1e-15);
  EXPECT_EQ(clusters[1].count, 1u);
  EXPECT_LT(axis_angle(clusters[1].representative, MeasurementDirection({0, 1, 0})), 1e-15);
  EXPECT_EQ(clusters[2].count, 1u);
}

TEST(SeamWrappedAngles, YAxisReadsAsNegativeHalfTurn) {
  const auto [theta, phi] = seam_wrapped_angles(MeasurementDirection({0, 1, 0}), 0.01);
  EXPECT_NEAR(theta, 0.5, 1e-15);
  EXPECT_NEAR(phi, -0.5, 1e-15);
  const auto [t2, p2] = seam_wrapped_angles(MeasurementDirection::x_axis(), 0.01);
  EXPECT_EQ(t2, 0.5);
  EXPECT_EQ(p2, 0.0);
}

TEST(Table1, SingleSampleIsOneFullCluster) {
  ExperimentConfig c;
  c.samples = 1;
  const auto clusters = run_table1(c);
  ASSERT_EQ(clusters.size(), 1u);
  EXPECT_EQ(clusters[0].count, 1u);
  EXPECT_DOUBLE_EQ(clusters[0].percentage, 100.0);
  const std::string csv = table1_csv(clusters);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "theta_over_pi,phi_over_pi,count,percentage");
  EXPECT_NE(csv.find(",1,100\n"), std::string::npos) << csv;
}

TEST(Table1, XStatesPreferTheMcdm) {
  ExperimentConfig c;
  c.samples = 300;
  c.seed = 3;
  const auto clusters = run_table1(c);
  ASSERT_FALSE(clusters.empty());
  EXPECT_LT(axis_angle(clusters[0].representative, MeasurementDirection::x_axis()), 0.01 * kPi);
  EXPECT_GE(clusters[0].percentage, 95.0);
  std::size_t total = 0;
  for (const auto& cl : clusters) total += cl.count;
  EXPECT_EQ(total, c.samples);
}

TEST(Table1, IndependentOfWorkerCount) {
  ExperimentConfig c;
  c.samples = 200;
  c.seed = 11;
  const std::string one = table1_csv(run_table1(c));
  c.workers = 4;
  EXPECT_EQ(table1_csv(run_table1(c)), one);
}

TEST(HistogramBin, ChartCorners) {
  EXPECT_EQ(histogram_bin(MeasurementDirection::x_axis(), 100, 100), std::make_pair(50, 50));
  EXPECT_EQ(histogram_bin(MeasurementDirection({0, 0, 1}), 100, 100), std::make_pair(0, 50));
  EXPECT_EQ(histogram_bin(MeasurementDirection({0, -1, 0}), 100, 100), std::make_pair(50, 0));
  // The +y axis lies on the seam and maps to the phi = -pi/2 edge.
  EXPECT_EQ(histogram_bin(MeasurementDirection({0, 1, 0}), 100, 100), std::make_pair(50, 0));
}

TEST(Histogram, MassModeAndDeterminism) {
  ExperimentConfig c;
  c.samples = 300;
  c.seed = 5;
  const DirectionHistogram h = run_histogram(c);
  EXPECT_EQ(h.total(), c.samples);
  // With 100 bins (pi/2, 0) is a bin corner; the mode is one of its four cells.
  const auto mode = std::max_element(h.counts.begin(), h.counts.end()) - h.counts.begin();
  EXPECT_TRUE(mode / h.phi_bins == 49 || mode / h.phi_bins == 50) << mode;
  EXPECT_TRUE(mode % h.phi_bins == 49 || mode % h.phi_bins == 50) << mode;
  const std::string csv = histogram_csv(h);
  EXPECT_EQ(csv, histogram_csv(run_histogram(c)));
  c.workers = 3;
  EXPECT_EQ(csv, histogram_csv(run_histogram(c)));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 100 * 100);
  EXPECT_NE(csv.find("\n50,50,0.5,0,"), std::string::npos);
}

TEST(Histogram, OddResolutionModeContainsMcdm) {
  ExperimentConfig c;
  c.samples = 300;
  c.seed = 5;
  c.theta_bins = 99;
  c.phi_bins = 99;
  const DirectionHistogram h = run_histogram(c);
  const auto mode = std::max_element(h.counts.begin(), h.counts.end()) - h.counts.begin();
  EXPECT_EQ(mode / h.phi_bins, 49);
  EXPECT_EQ(mode % h.phi_bins, 49);
}

TEST(Histogram, CustomResolution) {
  ExperimentConfig c;
  c.samples = 20;
  c.theta_bins = 7;
  c.phi_bins = 3;
  const DirectionHistogram h = run_histogram(c);
  EXPECT_EQ(h.counts.size(), 21u);
  EXPECT_EQ(h.total(), 20u);
}

TEST(Mixture, CurveShape) {
  ExperimentConfig c;
  const auto points = run_mixture(c);
  ASSERT_EQ(points.size(), 101u);
  EXPECT_EQ(points.front().q, 0.0);
  EXPECT_NEAR(points.front().discord, 0.0, 1e-9);
  EXPECT_NEAR(points.front().mcdm_discord, 0.0, 1e-9);
  EXPECT_EQ(points.back().q, 1.0);
  EXPECT_NEAR(points.back().discord, 1.0, 1e-9);
  EXPECT_NEAR(points.back().mcdm_discord, 1.0, 1e-9);
  double max_gap = 0.0;
  double at = -1.0;
  for (const auto& p : points) {
    EXPECT_GE(p.mcdm_discord, p.discord);
    if (p.mcdm_discord - p.discord > max_gap) {
      max_gap = p.mcdm_discord - p.discord;
      at = p.q;
    }
  }
  EXPECT_LT(max_gap, 0.03);
  EXPECT_NEAR(max_gap, 0.0253042, 1e-6);
  EXPECT_DOUBLE_EQ(at, 0.11);
  const std::string csv = mixture_csv(points);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "q,discord,mcdm_discord");
  EXPECT_NE(csv.find("\n1,1,1\n"), std::string::npos);
}

TEST(Scatter, BoundAndSummary) {
  ExperimentConfig c;
  c.samples = 200;
  c.seed = 9;
  const ScatterResult r = run_scatter(c);
  ASSERT_EQ(r.discord.size(), 200u);
  double sum = 0.0;
  for (std::size_t i = 0; i < r.discord.size(); ++i) {
    EXPECT_GE(r.mcdm_discord[i], r.discord[i] - 1e-9);
    sum += (r.mcdm_discord[i] - r.discord[i]) * (r.mcdm_discord[i] - r.discord[i]);
  }
  EXPECT_DOUBLE_EQ(r.mean_square_gap, sum / 200);
  EXPECT_LT(r.mean_square_gap, 1e-3);
  const std::string csv = scatter_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "index,discord,mcdm_discord");
  EXPECT_NE(csv.find("\n# mean_square_gap,"), std::string::npos);
  c.workers = 2;
  EXPECT_EQ(scatter_csv(run_scatter(c)), csv);
}

TEST(WriteFileAtomically, ReplacesContentsWithoutLeftovers) {
  const auto path = std::filesystem::temp_directory_path() / "qdiscord_atomic.csv";
  write_file_atomically(path, "first\n");
  write_file_atomically(path, "second\n");
  EXPECT_EQ(read_file(path), "second\n");
  auto tmp = path;
  tmp += ".tmp";
  EXPECT_FALSE(std::filesystem::exists(tmp));
  std::filesystem::remove(path);
}

TEST(WriteFileAtomically, FailureLeavesNoFile) {
  const auto path = std::filesystem::temp_directory_path() / "qdiscord_no_such_dir" / "out.csv";
  EXPECT_ANY_THROW(write_file_atomically(path, "x"));
  EXPECT_FALSE(std::filesystem::exists(path));
}

}  // namespace
}  // namespace qdiscord
