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

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <numbers>
#include <optional>

#include "qdiscord/canonical.hpp"
#include "qdiscord/ensembles.hpp"

namespace qdiscord {
namespace {

double over_pi(double radians) { return radians / std::numbers::pi; }

}  // namespace

void validate(const ExperimentConfig& config) {
  if (config.samples == 0) throw ValidationError("sample count must be positive");
  if (config.theta_bins <= 0 || config.phi_bins <= 0) {
    throw ValidationError("histogram bins must be positive");
  }
  if (config.workers == 0) throw ValidationError("worker count must be positive");
  if (!(config.cluster_tolerance > 0.0)) throw ValidationError("cluster tolerance must be positive");
  if (config.q_points < 2) throw ValidationError("mixture curve needs at least two q values");
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  threads.clear();  // joins
  if (first_error) std::rethrow_exception(first_error);
}

MeasurementDirection canonical_optimal_direction(const ExperimentConfig& config, std::size_t index,
                                                 bool x_states) {
  SeededGenerator gen(config.seed, index);
  TwoQubitState rho = random_hs_state(gen);
  if (x_states) rho = project_x_state(rho);
  const CanonicalDecomposition canon = to_canonical(rho);
  return minimize_conditional_entropy(blocks(canon.canonical_state), MeasurementDirection::x_axis(),
                                      config.optimizer)
      .direction;
}

std::vector<DirectionCluster> cluster_directions(std::span<const MeasurementDirection> directions,
                                                 double tolerance_radians) {
  std::vector<DirectionCluster> clusters;
  for (const auto& n : directions) {
    auto it = std::find_if(clusters.begin(), clusters.end(), [&](const DirectionCluster& c) {
      return axis_angle(c.representative, n) <= tolerance_radians;
    });
    if (it == clusters.end()) {
      clusters.push_back({n.hemisphere(), 1, 0.0});
    } else {
      ++it->count;
    }
  }
  for (auto& c : clusters) {
    c.percentage = 100.0 * static_cast<double>(c.count) / static_cast<double>(directions.size());
  }
  std::stable_sort(clusters.begin(), clusters.end(),
                   [](const DirectionCluster& a, const DirectionCluster& b) { return a.count > b.count; });
  return clusters;
}

std::vector<DirectionCluster> run_table1(const ExperimentConfig& config) {
  validate(config);
  std::vector<std::optional<MeasurementDirection>> slots(config.samples);
  parallel_for(config.samples, config.workers,
               [&](std::size_t i) { slots[i] = canonical_optimal_direction(config, i, true); });
  std::vector<MeasurementDirection> directions;
  directions.reserve(slots.size());
  for (auto& s : slots) directions.push_back(*s);
  return cluster_directions(directions, config.cluster_tolerance * std::numbers::pi);
}

std::pair<double, double> seam_wrapped_angles(const MeasurementDirection& n, double tolerance_over_pi) {
  double theta = over_pi(n.theta());
  double phi = over_pi(n.phi());
  // phi -> +pi/2 is the same axis as (pi - theta, -pi/2) on the chart seam.
  if (phi > 0.5 - tolerance_over_pi) {
    theta = 1.0 - theta;
    phi -= 1.0;
  }
  return {theta, phi};
}

std::string table1_csv(std::span<const DirectionCluster> clusters, double tolerance_over_pi) {
  std::string out = "theta_over_pi,phi_over_pi,count,percentage\n";
  for (const auto& c : clusters) {
    const auto [theta, phi] = seam_wrapped_angles(c.representative, tolerance_over_pi);
    out += fmt::format("{:.12g},{:.12g},{},{:.12g}\n", theta, phi, c.count, c.percentage);
  }
  return out;
}

std::size_t DirectionHistogram::total() const {
  std::size_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

std::pair<int, int> histogram_bin(const MeasurementDirection& n, int theta_bins, int phi_bins) {
  const double t = over_pi(n.theta());
  const double p = over_pi(n.phi()) + 0.5;
  const int ti = std::clamp(static_cast<int>(std::floor(t * theta_bins)), 0, theta_bins - 1);
  const int pi = std::clamp(static_cast<int>(std::floor(p * phi_bins)), 0, phi_bins - 1);
  return {ti, pi};
}

DirectionHistogram run_histogram(const ExperimentConfig& config) {
  validate(config);
  std::vector<std::pair<int, int>> bins(config.samples);
  parallel_for(config.samples, config.workers, [&](std::size_t i) {
    bins[i] = histogram_bin(canonical_optimal_direction(config, i, false), config.theta_bins,
                            config.phi_bins);
  });
  DirectionHistogram h{config.theta_bins, config.phi_bins,
                       std::vector<std::size_t>(static_cast<std::size_t>(config.theta_bins) *
                                                config.phi_bins)};
  for (const auto& [t, p] : bins) ++h.counts[static_cast<std::size_t>(t) * h.phi_bins + p];
  return h;
}

std::string histogram_csv(const DirectionHistogram& h) {
  std::string out = "theta_bin,phi_bin,theta_lo_over_pi,phi_lo_over_pi,count\n";
  for (int t = 0; t < h.theta_bins; ++t) {
    for (int p = 0; p < h.phi_bins; ++p) {
      out += fmt::format("{},{},{:.12g},{:.12g},{}\n", t, p, static_cast<double>(t) / h.theta_bins,
                         static_cast<double>(p) / h.phi_bins - 0.5, h.at(t, p));
    }
  }
  return out;
}

std::vector<MixturePoint> run_mixture(const ExperimentConfig& config) {
  validate(config);
  std::vector<MixturePoint> points(static_cast<std::size_t>(config.q_points));
  parallel_for(points.size(), config.workers, [&](std::size_t i) {
    const double q = static_cast<double>(i) / static_cast<double>(config.q_points - 1);
    const DiscordReport r = quantum_discord(mixture_family(q), config.optimizer);
    points[i] = {q, r.discord, r.mcdm_discord};
  });
  return points;
}

std::string mixture_csv(std::span<const MixturePoint> points) {
  std::string out = "q,discord,mcdm_discord\n";
  for (const auto& p : points) {
    out += fmt::format("{:.12g},{:.12g},{:.12g}\n", p.q, p.discord, p.mcdm_discord);
  }
  return out;
}

ScatterResult run_scatter(const ExperimentConfig& config) {
  validate(config);
  ScatterResult r;
  r.discord.resize(config.samples);
  r.mcdm_discord.resize(config.samples);
  parallel_for(config.samples, config.workers, [&](std::size_t i) {
    SeededGenerator gen(config.seed, i);
    const DiscordReport report = quantum_discord(random_hs_state(gen), config.optimizer);
    r.discord[i] = report.discord;
    r.mcdm_discord[i] = report.mcdm_discord;
  });
  double sum = 0.0;
  for (std::size_t i = 0; i < config.samples; ++i) {
    const double gap = r.mcdm_discord[i] - r.discord[i];
    sum += gap * gap;
  }
  r.mean_square_gap = sum / static_cast<double>(config.samples);
  return r;
}

std::string scatter_csv(const ScatterResult& result) {
  std::string out = "index,discord,mcdm_discord\n";
  for (std::size_t i = 0; i < result.discord.size(); ++i) {
    out += fmt::format("{},{:.12g},{:.12g}\n", i, result.discord[i], result.mcdm_discord[i]);
  }
  out += fmt::format("# mean_square_gap,{:.12g}\n", result.mean_square_gap);
  return out;
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace qdiscord
