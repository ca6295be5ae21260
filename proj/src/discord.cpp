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

#include "qdiscord/discord.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

namespace qdiscord {
namespace {

constexpr double kBranchGuard = 1e-12;
constexpr double kEigenvalueSlack = 1e-9;
constexpr double kReportClamp = 1e-9;
constexpr double kWitnessTol = 1e-9;
constexpr double kNegligibleNorm = 1e-10;
constexpr double kMinImprovement = 1e-15;

double branch_entropy(double one_plus_minus_f, double g) {
  if (one_plus_minus_f < kBranchGuard) return 0.0;
  if (g - one_plus_minus_f > kEigenvalueSlack) {
    throw ConsistencyError("conditional state of B has a negative eigenvalue (g = " +
                           std::to_string(g) + ", 1+-f = " + std::to_string(one_plus_minus_f) +
                           "); input is not a valid state");
  }
  const double x = std::min(1.0, g / one_plus_minus_f);
  return 0.5 * one_plus_minus_f * binary_entropy_h(x);
}

double closed_form(const BlockDecomposition& blocks, const Vec3& n) {
  const ConditionalEntropyTerms t = conditional_entropy_terms(blocks, n);
  return branch_entropy(1.0 + t.f, t.g_plus) + branch_entropy(1.0 - t.f, t.g_minus);
}

double clamp_small_negative(double v) { return (v < 0.0 && v >= -kReportClamp) ? 0.0 : v; }

struct Candidate {
  Vec3 n;
  double value;
};

// Orthonormal basis of the tangent plane at unit vector n.
std::pair<Vec3, Vec3> tangent_basis(const Vec3& n) {
  std::size_t least = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(n[i]) < std::abs(n[least])) least = i;
  Vec3 e{};
  e[least] = 1.0;
  Vec3 t1 = cross(n, e);
  t1 = (1.0 / norm(t1)) * t1;
  return {t1, cross(n, t1)};
}

Vec3 unit(const Vec3& v) { return (1.0 / norm(v)) * v; }

// Compass search on the sphere, moving only on strict improvement.
Candidate refine(const BlockDecomposition& blocks, Candidate start, double step,
                 const OptimizerOptions& options) {
  constexpr double kDiag = std::numbers::sqrt2 / 2.0;
  constexpr std::array<std::array<double, 2>, 8> kPoll = {{
      {1, 0}, {-1, 0}, {0, 1}, {0, -1}, {kDiag, kDiag}, {-kDiag, kDiag}, {kDiag, -kDiag},
      {-kDiag, -kDiag}}};
  Candidate cur = start;
  for (int it = 0; it < options.max_iterations && step > options.min_step; ++it) {
    const auto [t1, t2] = tangent_basis(cur.n);
    Candidate best = cur;
    for (const auto& d : kPoll) {
      const Vec3 trial = unit(cur.n + (step * d[0]) * t1 + (step * d[1]) * t2);
      const double v = closed_form(blocks, trial);
      if (v < best.value) best = {trial, v};
    }
    if (best.value < cur.value - kMinImprovement) {
      cur = best;
    } else {
      step *= 0.5;
    }
  }
  return cur;
}

}  // namespace

std::pair<Matrix2, Matrix2> projectors(const MeasurementDirection& n) {
  Matrix2 ndotsigma;
  for (std::size_t i = 0; i < 3; ++i) ndotsigma += pauli(i + 1) * Complex(n[i]);
  const Matrix2 id = Matrix2::identity();
  return {(id + ndotsigma) * Complex(0.5), (id - ndotsigma) * Complex(0.5)};
}

PostMeasurementEnsemble post_measurement(const TwoQubitState& rho, const MeasurementDirection& n) {
  const auto [p1, p2] = projectors(n);
  PostMeasurementEnsemble ensemble;
  const std::array<Matrix2, 2> proj = {p1, p2};
  for (std::size_t k = 0; k < 2; ++k) {
    const Matrix4 lifted = kron(proj[k], Matrix2::identity());
    const Matrix2 unnormalized = partial_trace(lifted * rho.matrix() * lifted, Subsystem::B);
    const double p = unnormalized.trace().real();
    auto& out = ensemble.outcomes[k];
    out.probability = std::max(0.0, p);
    if (p >= kZeroProbability) {
      out.state.emplace(unnormalized * Complex(1.0 / p), 1e-9);
    }
  }
  return ensemble;
}

double delta_norm_sq(const Vec3& lambda_diag, const MeasurementDirection& n) {
  double s = 0.0;
  for (std::size_t i = 0; i < 3; ++i) s += lambda_diag[i] * lambda_diag[i] * n[i] * n[i];
  return s / 16.0;
}

ConditionalEntropyTerms conditional_entropy_terms(const BlockDecomposition& blocks, const Vec3& n) {
  Vec3 rtn{};
  for (std::size_t j = 0; j < 3; ++j)
    rtn[j] = blocks.r(0, j) * n[0] + blocks.r(1, j) * n[1] + blocks.r(2, j) * n[2];
  return {dot(blocks.a, n), norm(blocks.b + rtn), norm(blocks.b - rtn)};
}

double conditional_entropy_closed(const BlockDecomposition& blocks, const MeasurementDirection& n) {
  return closed_form(blocks, n.vector());
}

double conditional_entropy_direct(const TwoQubitState& rho, const MeasurementDirection& n) {
  const auto [p1, p2] = projectors(n);
  double total = 0.0;
  for (const Matrix2& proj : {p1, p2}) {
    const Matrix4 lifted = kron(proj, Matrix2::identity());
    const Matrix2 unnormalized = partial_trace(lifted * rho.matrix() * lifted, Subsystem::B);
    const double p = unnormalized.trace().real();
    if (p < kZeroProbability) continue;
    // p S(rho_k) = -sum mu log2(mu / p) over eigenvalues mu of p rho_k.
    for (double mu : eigvals_hermitian(unnormalized)) {
      if (mu > 0.0) total -= mu * std::log2(mu / p);
    }
  }
  return total;
}

ConditionalEntropyMinimum minimize_conditional_entropy(const BlockDecomposition& blocks,
                                                       const MeasurementDirection& reference,
                                                       const OptimizerOptions& options) {
  const int nt = options.theta_bins;
  const int np = options.phi_bins;
  if (nt < 2 || np < 2) throw ValidationError("optimizer grid needs at least 2x2 cells");
  const double dtheta = std::numbers::pi / nt;
  const double dphi = std::numbers::pi / np;

  std::vector<double> sin_t(nt), cos_t(nt), sin_p(np), cos_p(np);
  for (int i = 0; i < nt; ++i) {
    sin_t[i] = std::sin(i * dtheta);
    cos_t[i] = std::cos(i * dtheta);
  }
  for (int j = 0; j < np; ++j) {
    sin_p[j] = std::sin(-std::numbers::pi / 2 + j * dphi);
    cos_p[j] = std::cos(-std::numbers::pi / 2 + j * dphi);
  }
  auto grid_point = [&](std::size_t idx) -> Vec3 {
    const std::size_t i = idx / np;
    const std::size_t j = idx % np;
    return {sin_t[i] * cos_p[j], sin_t[i] * sin_p[j], cos_t[i]};
  };

  // Stage 1: grid.
  const std::size_t cells = static_cast<std::size_t>(nt) * np;
  std::vector<double> values(cells);
  for (std::size_t idx = 0; idx < cells; ++idx) values[idx] = closed_form(blocks, grid_point(idx));

  std::vector<std::size_t> order(cells);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });

  const double exclusion = std::cos(3.0 * std::max(dtheta, dphi));
  std::vector<Candidate> seeds;
  seeds.push_back({reference.vector(), closed_form(blocks, reference.vector())});
  int grid_seeds = 0;
  for (std::size_t idx : order) {
    if (grid_seeds >= options.max_seeds) break;
    const Vec3 n = grid_point(idx);
    bool separated = true;
    for (std::size_t s = 1; s < seeds.size(); ++s) {
      if (std::abs(dot(n, seeds[s].n)) > exclusion) {
        separated = false;
        break;
      }
    }
    if (!separated) continue;
    seeds.push_back({n, values[idx]});
    ++grid_seeds;
  }

  // Stage 2: local refinement of every seed.
  const double step0 = std::max(dtheta, dphi);
  std::vector<Candidate> refined;
  refined.reserve(seeds.size());
  for (const Candidate& s : seeds) refined.push_back(refine(blocks, s, step0, options));

  double best = refined.front().value;
  for (const Candidate& c : refined) best = std::min(best, c.value);

  // Ties go to the candidate whose axis is closest to the reference axis.
  const Candidate* chosen = nullptr;
  double chosen_alignment = -1.0;
  for (const Candidate& c : refined) {
    if (c.value > best + options.tie_tolerance) continue;
    const double alignment = std::abs(dot(c.n, reference.vector()));
    if (alignment > chosen_alignment) {
      chosen_alignment = alignment;
      chosen = &c;
    }
  }
  return {MeasurementDirection::normalized(chosen->n).hemisphere(), chosen->value};
}

ConditionalEntropyMinimum minimize_conditional_entropy(const TwoQubitState& rho,
                                                       const OptimizerOptions& options) {
  return minimize_conditional_entropy(blocks(rho), MeasurementDirection::x_axis(), options);
}

double mutual_information(const TwoQubitState& rho) {
  const double i = von_neumann_entropy(partial_trace(rho, Subsystem::A)) +
                   von_neumann_entropy(partial_trace(rho, Subsystem::B)) - von_neumann_entropy(rho);
  return clamp_small_negative(i);
}

double classical_correlation(const TwoQubitState& rho) {
  const auto minimum = minimize_conditional_entropy(rho);
  return clamp_small_negative(von_neumann_entropy(partial_trace(rho, Subsystem::B)) - minimum.value);
}

DiscordReport quantum_discord(const TwoQubitState& rho, const OptimizerOptions& options) {
  const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
  const double s_b = von_neumann_entropy(partial_trace(rho, Subsystem::B));
  const double s_ab = von_neumann_entropy(rho);
  const BlockDecomposition b = blocks(rho);
  const MeasurementDirection mcdm_dir = mcdm(to_canonical(rho));

  const auto minimum = minimize_conditional_entropy(b, mcdm_dir, options);
  const double at_mcdm = conditional_entropy_closed(b, mcdm_dir);

  DiscordReport r;
  r.mutual_information = clamp_small_negative(s_a + s_b - s_ab);
  r.classical_correlation = clamp_small_negative(s_b - minimum.value);
  // C <= I up to rounding; snap so that D = I - C stays non-negative.
  if (r.classical_correlation > r.mutual_information &&
      r.classical_correlation - r.mutual_information <= kReportClamp) {
    r.classical_correlation = r.mutual_information;
  }
  r.discord = r.mutual_information - r.classical_correlation;
  r.mcdm_discord = clamp_small_negative(s_a - s_ab + at_mcdm);
  r.optimal_direction = minimum.direction;
  r.mcdm_direction = mcdm_dir.hemisphere();
  r.min_conditional_entropy = minimum.value;
  r.mcdm_conditional_entropy = at_mcdm;
  return r;
}

double mcdm_discord(const TwoQubitState& rho, const CanonicalDecomposition& decomp) {
  const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
  const double s_ab = von_neumann_entropy(rho);
  return clamp_small_negative(s_a - s_ab + conditional_entropy_closed(blocks(rho), mcdm(decomp)));
}

TwoQubitState bell_diagonal_state(const Vec3& c) {
  Matrix4 m = Matrix4::identity();
  for (std::size_t i = 0; i < 3; ++i) m += kron(pauli(i + 1), pauli(i + 1)) * Complex(c[i]);
  return TwoQubitState(m * Complex(0.25));
}

double bell_diagonal_classical_correlation(const Vec3& c) {
  bell_diagonal_state(c);  // validates positivity
  const double cmax = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2])});
  return 1.0 - binary_entropy_h(cmax);
}

std::optional<MeasurementDirection> zero_discord_witness(const BlockDecomposition& blocks) {
  Vec3 n;
  if (frobenius_norm(blocks.r) > kNegligibleNorm) {
    n = svd3(blocks.r).u.column(0);
  } else if (norm(blocks.a) > kNegligibleNorm) {
    n = (1.0 / norm(blocks.a)) * blocks.a;
  } else {
    return MeasurementDirection::x_axis();
  }
  const Mat3 proj = outer(n, n);
  const Vec3 a_resid = proj * blocks.a - blocks.a;
  if (std::max({std::abs(a_resid[0]), std::abs(a_resid[1]), std::abs(a_resid[2])}) > kWitnessTol) {
    return std::nullopt;
  }
  if (max_abs(proj * blocks.r - blocks.r) > kWitnessTol) return std::nullopt;
  return MeasurementDirection::normalized(n);
}

TwoQubitState construct_zero_discord(const std::array<double, 2>& p, const MeasurementDirection& n,
                                     const std::array<QubitState, 2>& sigma) {
  if (p[0] < 0.0 || p[1] < 0.0 || std::abs(p[0] + p[1] - 1.0) > 1e-12) {
    throw ValidationError("probabilities must be non-negative and sum to 1");
  }
  const auto [pi1, pi2] = projectors(n);
  const Matrix4 m = kron(pi1, sigma[0].matrix()) * Complex(p[0]) +
                    kron(pi2, sigma[1].matrix()) * Complex(p[1]);
  return TwoQubitState(m, 1e-10);
}

}  // namespace qdiscord
