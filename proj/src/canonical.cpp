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

#include "qdiscord/canonical.hpp"

#include <cmath>
#include <numeric>

namespace qdiscord {
namespace {

constexpr int kSvdMaxSweeps = 60;
constexpr double kRankTol = 1e-13;

void rotate_columns(Mat3& m, std::size_t p, std::size_t q, double c, double s) {
  for (std::size_t k = 0; k < 3; ++k) {
    const double mp = m(k, p);
    const double mq = m(k, q);
    m(k, p) = c * mp - s * mq;
    m(k, q) = s * mp + c * mq;
  }
}

// Fills the columns flagged as missing so that `u` becomes orthonormal.
void complete_orthonormal(Mat3& u, const std::array<bool, 3>& have) {
  for (std::size_t c = 0; c < 3; ++c) {
    if (have[c]) continue;
    // Try the standard basis vectors in order; keep the one with the largest
    // residual after projecting out the columns already fixed.
    Vec3 best{};
    double best_len = -1.0;
    for (std::size_t e = 0; e < 3; ++e) {
      Vec3 v{};
      v[e] = 1.0;
      for (std::size_t k = 0; k < 3; ++k) {
        if (!have[k] && k >= c) continue;
        const Vec3 col = u.column(k);
        v = v - dot(v, col) * col;
      }
      const double len = norm(v);
      if (len > best_len + 1e-12) {
        best_len = len;
        best = (1.0 / len) * v;
      }
    }
    u.set_column(c, best);
  }
}

}  // namespace

SingularValueDecomposition3 svd3(const Mat3& a) {
  Mat3 w = a;
  Mat3 v = Mat3::identity();
  constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kPairs = {
      std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}, {1, 2}};

  for (int sweep = 0; sweep < kSvdMaxSweeps; ++sweep) {
    bool rotated = false;
    for (const auto& [p, q] : kPairs) {
      const Vec3 cp = w.column(p);
      const Vec3 cq = w.column(q);
      const double alpha = dot(cp, cp);
      const double beta = dot(cq, cq);
      const double gamma = dot(cp, cq);
      if (gamma == 0.0 || std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) continue;
      rotated = true;
      const double zeta = (beta - alpha) / (2.0 * gamma);
      const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
      const double c = 1.0 / std::hypot(1.0, t);
      const double s = c * t;
      rotate_columns(w, p, q, c, s);
      rotate_columns(v, p, q, c, s);
    }
    if (!rotated) break;
  }

  std::array<double, 3> lens{};
  for (std::size_t c = 0; c < 3; ++c) lens[c] = norm(w.column(c));
  std::array<std::size_t, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return lens[x] > lens[y]; });

  SingularValueDecomposition3 out;
  std::array<bool, 3> have{};
  const double scale = lens[order[0]];
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t src = order[k];
    out.s[k] = lens[src];
    out.v.set_column(k, v.column(src));
    if (lens[src] > kRankTol * scale && lens[src] > 0.0) {
      out.u.set_column(k, (1.0 / lens[src]) * w.column(src));
      have[k] = true;
    }
  }
  complete_orthonormal(out.u, have);
  return out;
}

CanonicalDecomposition to_canonical(const TwoQubitState& rho) {
  const CorrelationMatrix corr = correlation_matrix(rho);
  SingularValueDecomposition3 svd = svd3(corr.lambda);

  // Only proper rotations lift to SU(2): absorb reflections into s3.
  Vec3 lambda = svd.s;
  if (svd.u.determinant() < 0.0) {
    svd.u.set_column(2, -1.0 * svd.u.column(2));
    lambda[2] = -lambda[2];
  }
  if (svd.v.determinant() < 0.0) {
    svd.v.set_column(2, -1.0 * svd.v.column(2));
    lambda[2] = -lambda[2];
  }
  // Rank-deficient Lambda: the flip is free, report +0 rather than -0.
  if (lambda[2] == 0.0) lambda[2] = 0.0;

  const Rotation3 rotation_a(svd.u.transpose(), 1e-10);
  const Rotation3 rotation_b(svd.v.transpose(), 1e-10);
  const Matrix2 u1 = su2_from_so3(rotation_a);
  const Matrix2 u2 = su2_from_so3(rotation_b);
  const Matrix4 local = kron(u1, u2);
  TwoQubitState canonical(conjugate(local, rho.matrix()), 1e-10);
  return CanonicalDecomposition{std::move(canonical), u1, u2, lambda, rotation_a, rotation_b};
}

bool is_canonical(const TwoQubitState& rho, double tol) {
  const Mat3 l = correlation_matrix(rho).lambda;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      if (r != c && std::abs(l(r, c)) > tol) return false;
  return l(0, 0) >= l(1, 1) - tol && l(1, 1) >= std::abs(l(2, 2)) - tol;
}

MeasurementDirection mcdm(const CanonicalDecomposition& decomp) {
  return MeasurementDirection::normalized(decomp.rotation_a.matrix().row(0));
}

}  // namespace qdiscord
