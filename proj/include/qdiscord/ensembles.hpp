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
#include <optional>
#include <random>

#include "qdiscord/direction.hpp"
#include "qdiscord/linalg.hpp"

namespace qdiscord {

/// Reproducible random source.
///
/// A generator is identified by (seed, stream). Streams are independent
/// mt19937_64 engines whose initial state is derived from both numbers with
/// SplitMix64, so worker threads can draw sample i from stream i and obtain
/// the same numbers regardless of how samples are scheduled.
class SeededGenerator {
 public:
  explicit SeededGenerator(std::uint64_t seed, std::uint64_t stream = 0);

  /// Independent generator for the given stream under the same seed.
  SeededGenerator fork(std::uint64_t stream) const { return SeededGenerator(seed_, stream); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller.
  double normal();
  /// Real and imaginary parts independent standard normals.
  Complex complex_normal() { return {normal(), normal()}; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::optional<double> spare_normal_;
};

/// rho = G G^dagger / Tr(G G^dagger) with G a 4x4 complex Ginibre matrix,
/// i.e. a sample from the Hilbert-Schmidt measure.
TwoQubitState random_hs_state(SeededGenerator& gen);

/// Hilbert-Schmidt random single-qubit state.
QubitState random_qubit_state(SeededGenerator& gen);

/// Haar-random element of SU(2).
Matrix2 random_su2(SeededGenerator& gen);

MeasurementDirection random_direction(SeededGenerator& gen);

/// Coefficients (c1, c2, c3) of a uniformly weighted mixture of the four Bell
/// states; always a valid Bell-diagonal state.
Vec3 random_bell_diagonal_coefficients(SeededGenerator& gen);

/// Keeps only the diagonal and anti-diagonal entries.
TwoQubitState project_x_state(const TwoQubitState& rho);

/// (1 - q)|psi0><psi0| + q|psi1><psi1| with psi0 = (|00> + |10>)/sqrt2 and
/// psi1 = (|01> + |10>)/sqrt2. Throws DomainError for q outside [0, 1].
TwoQubitState mixture_family(double q);

/// X-state whose optimal measurement lies strictly between the x-y plane and
/// the z axis. Entries are used exactly as printed (4 decimals).
TwoQubitState counterexample_state();

TwoQubitState product_state(const QubitState& a, const QubitState& b);

/// |psi><psi| for a normalized two-qubit amplitude vector.
TwoQubitState pure_state(const std::array<Complex, 4>& amplitudes);

}  // namespace qdiscord
