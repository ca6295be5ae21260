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

#include "qdiscord/direction.hpp"
#include "qdiscord/fano_bloch.hpp"
#include "qdiscord/linalg.hpp"

namespace qdiscord {

/// A = U diag(s) V^T with s sorted descending and U, V orthogonal (not
/// necessarily proper).
struct SingularValueDecomposition3 {
  Mat3 u;
  Vec3 s{};
  Mat3 v;
};

/// One-sided Jacobi SVD. Exactly diagonal input with non-increasing
/// non-negative entries comes back with U = V = I.
SingularValueDecomposition3 svd3(const Mat3& a);

/// Local-unitary representative of a two-qubit state whose correlation
/// matrix is diag(l1, l2, l3) with l1 >= l2 >= |l3| and sign(l3) = sign(det).
///
/// canonical_state = (u1 (x) u2) rho (u1 (x) u2)^dagger. The rotations act on
/// Bloch vectors: a' = rotation_a a, b' = rotation_b b, and
/// Lambda' = rotation_a Lambda rotation_b^T.
struct CanonicalDecomposition {
  TwoQubitState canonical_state;
  Matrix2 u1;
  Matrix2 u2;
  Vec3 lambda_diag{};
  Rotation3 rotation_a;
  Rotation3 rotation_b;
};

CanonicalDecomposition to_canonical(const TwoQubitState& rho);

/// Lambda diagonal within tol, l1 >= l2 >= |l3| and l2 >= 0 up to tol.
bool is_canonical(const TwoQubitState& rho, double tol = 1e-9);

/// Maximal-correlation-direction measurement of the original state: the Bloch
/// vector of u1^dagger sigma_x u1.
MeasurementDirection mcdm(const CanonicalDecomposition& decomp);

}  // namespace qdiscord
