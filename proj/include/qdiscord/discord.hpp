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

#include <array>
#include <optional>
#include <utility>

#include "qdiscord/canonical.hpp"
#include "qdiscord/direction.hpp"
#include "qdiscord/fano_bloch.hpp"
#include "qdiscord/linalg.hpp"

namespace qdiscord {

/// Probabilities below this are treated as outcomes that never occur.
inline constexpr double kZeroProbability = 1e-12;

/// {(1 + n.sigma)/2, (1 - n.sigma)/2}.
std::pair<Matrix2, Matrix2> projectors(const MeasurementDirection& n);

struct MeasurementOutcome {
  double probability = 0.0;
  /// Empty when probability < kZeroProbability.
  std::optional<QubitState> state;
};

/// States of B conditioned on the two outcomes of measuring A along n.
struct PostMeasurementEnsemble {
  std::array<MeasurementOutcome, 2> outcomes;
};

PostMeasurementEnsemble post_measurement(const TwoQubitState& rho, const MeasurementDirection& n);

/// |Delta_1|^2 = 1/16 sum_i lambda_i^2 n_i^2 for a canonical correlation triple.
double delta_norm_sq(const Vec3& lambda_diag, const MeasurementDirection& n);

/// f = a.n and g_(+-) = |b +- R^T n|. The eigenvalues of p_k rho_k are
/// ((1 +- f) +- g_(+-)) / 4.
struct ConditionalEntropyTerms {
  double f = 0.0;
  double g_plus = 0.0;
  double g_minus = 0.0;
};

ConditionalEntropyTerms conditional_entropy_terms(const BlockDecomposition& blocks, const Vec3& n);

/// sum_k p_k S(rho_k) from the Fano-Bloch blocks:
///   (1+f)/2 h(g+/(1+f)) + (1-f)/2 h(g-/(1-f)).
/// Throws ConsistencyError when g exceeds 1 +- f by more than 1e-9.
double conditional_entropy_closed(const BlockDecomposition& blocks, const MeasurementDirection& n);

/// The same quantity from explicit projectors, partial traces and 2x2 spectra.
double conditional_entropy_direct(const TwoQubitState& rho, const MeasurementDirection& n);

struct OptimizerOptions {
  int theta_bins = 96;
  int phi_bins = 192;
  /// Grid seeds refined in stage two (best grid points, mutually separated).
  int max_seeds = 6;
  int max_iterations = 200;
  /// Pattern-search step (radians) at which refinement stops.
  double min_step = 1e-9;
  /// Candidates within this many bits of the best count as tied.
  double tie_tolerance = 1e-10;
};

struct ConditionalEntropyMinimum {
  MeasurementDirection direction;  // in the hemisphere chart
  double value = 0.0;
};

/// Global minimum of the conditional entropy over measurement directions.
///
/// Grid search over the hemisphere followed by compass-search refinement of
/// the best separated grid cells. Among tied minima the one whose axis is
/// closest to `reference` wins; `reference` is also always refined as a seed.
ConditionalEntropyMinimum minimize_conditional_entropy(
    const BlockDecomposition& blocks,
    const MeasurementDirection& reference = MeasurementDirection::x_axis(),
    const OptimizerOptions& options = {});

ConditionalEntropyMinimum minimize_conditional_entropy(const TwoQubitState& rho,
                                                       const OptimizerOptions& options = {});

double mutual_information(const TwoQubitState& rho);
double classical_correlation(const TwoQubitState& rho);

struct DiscordReport {
  double mutual_information = 0.0;
  double classical_correlation = 0.0;
  double discord = 0.0;
  double mcdm_discord = 0.0;
  MeasurementDirection optimal_direction = MeasurementDirection::x_axis();
  MeasurementDirection mcdm_direction = MeasurementDirection::x_axis();
  double min_conditional_entropy = 0.0;
  double mcdm_conditional_entropy = 0.0;
};

/// All correlation measures of a state. The optimizer breaks ties toward the
/// MCDM, so mcdm_discord >= discord holds exactly.
DiscordReport quantum_discord(const TwoQubitState& rho, const OptimizerOptions& options = {});

/// S(rho_A) - S(rho) + conditional entropy at the MCDM.
double mcdm_discord(const TwoQubitState& rho, const CanonicalDecomposition& decomp);

/// rho = 1/4 (1 + sum_i c_i sigma_i (x) sigma_i). Throws NotAStateError if
/// the coefficients do not give a positive operator.
TwoQubitState bell_diagonal_state(const Vec3& c);

/// 1 - h(max_i |c_i|). Throws NotAStateError for non-physical c.
double bell_diagonal_classical_correlation(const Vec3& c);

/// A direction n with n n^T a = a and n n^T R = R (tolerance 1e-9), which
/// exists exactly for zero-discord states.
std::optional<MeasurementDirection> zero_discord_witness(const BlockDecomposition& blocks);

/// sum_k p_k Pi_k (x) sigma_k. Throws ValidationError for bad probabilities.
TwoQubitState construct_zero_discord(const std::array<double, 2>& p, const MeasurementDirection& n,
                                     const std::array<QubitState, 2>& sigma);

}  // namespace qdiscord
