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

#include "qdiscord/linalg.hpp"

namespace qdiscord {

/// Real Pauli-basis coefficients tau[i][j] = Tr(sigma_i (x) sigma_j rho),
/// so that rho = 1/4 sum_ij tau[i][j] sigma_i (x) sigma_j.
class FanoBlochTensor {
 public:
  using Table = std::array<std::array<double, 4>, 4>;

  /// Requires tau[0][0] = 1 within 1e-12 and all entries in [-1, 1] (+1e-10).
  explicit FanoBlochTensor(const Table& tau);

  double operator()(std::size_t i, std::size_t j) const { return tau_[i][j]; }
  const Table& table() const { return tau_; }

 private:
  Table tau_{};
};

/// tau = [[1, b^T], [a, R]]: local Bloch vectors a (qubit A), b (qubit B) and
/// the raw two-body correlation block R.
struct BlockDecomposition {
  Vec3 a{};
  Vec3 b{};
  Mat3 r{};
};

/// Connected correlations Lambda = R - a b^T.
struct CorrelationMatrix {
  Mat3 lambda{};
};

/// Throws ValidationError when an imaginary part exceeds 1e-8.
FanoBlochTensor decompose(const TwoQubitState& rho);

/// Throws NotAStateError when the resulting operator is not positive
/// (eigenvalue below -1e-8).
TwoQubitState reconstruct(const FanoBlochTensor& tau);

BlockDecomposition blocks(const FanoBlochTensor& tau);
inline BlockDecomposition blocks(const TwoQubitState& rho) { return blocks(decompose(rho)); }

CorrelationMatrix correlation_matrix(const BlockDecomposition& blocks);
CorrelationMatrix correlation_matrix(const TwoQubitState& rho);

}  // namespace qdiscord
