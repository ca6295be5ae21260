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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qdiscord/discord.hpp"
#include "qdiscord/ensembles.hpp"
#include "test_support.hpp"

namespace qdiscord {
namespace {

Mat3 diag3(const Vec3& d) { return Mat3{{{{d[0], 0, 0}, {0, d[1], 0}, {0, 0, d[2]}}}}; }

Mat3 random_mat3(SeededGenerator& gen) {
  Mat3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = gen.normal();
  return m;
}

void expect_svd_valid(const Mat3& a, const SingularValueDecomposition3& d, double tol) {
  EXPECT_LT(max_abs(d.u.transpose() * d.u - Mat3::identity()), 1e-12);
  EXPECT_LT(max_abs(d.v.transpose() * d.v - Mat3::identity()), 1e-12);
  EXPECT_GE(d.s[0], d.s[1]);
  EXPECT_GE(d.s[1], d.s[2]);
  EXPECT_GE(d.s[2], 0.0);
  EXPECT_LT(max_abs(d.u * diag3(d.s) * d.v.transpose() - a), tol);
}

TEST(Svd3, RandomMatrices) {
  SeededGenerator gen(41);
  for (int i = 0; i < 1000; ++i) {
    const Mat3 a = random_mat3(gen);
    expect_svd_valid(a, svd3(a), 1e-12);
  }
}

TEST(Svd3, RankDeficientAndZero) {
  SeededGenerator gen(43);
  const Mat3 rank1 = outer({0.3, -0.2, 0.5}, {0.1, 0.7, -0.4});
  const auto d1 = svd3(rank1);
  expect_svd_valid(rank1, d1, 1e-14);
  EXPECT_NEAR(d1.s[1], 0.0, 1e-14);
  const auto d0 = svd3(Mat3{});
  expect_svd_valid(Mat3{}, d0, 1e-15);
  for (double s : d0.s) EXPECT_EQ(s, 0.0);
}

TEST(Svd3, DiagonalInputKeepsIdentityFactors) {
  const Mat3 a = diag3({0.2, 0.2, 0.147876});
  const auto d = svd3(a);
  EXPECT_EQ(d.u, Mat3::identity());
  EXPECT_EQ(d.v, Mat3::identity());
}

TEST(ToCanonical, CounterexampleIsAlreadyCanonical) {
  const TwoQubitState rho = counterexample_state();
  const auto c = to_canonical(rho);
  EXPECT_NEAR(c.lambda_diag[0], 0.2, 1e-12);
  EXPECT_NEAR(c.lambda_diag[1], 0.2, 1e-12);
  EXPECT_NEAR(c.lambda_diag[2], 0.5 - 0.5934 * 0.5934, 1e-12);
  // Identity up to a global phase on each factor.
  EXPECT_NEAR(std::abs(c.u1(0, 0)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(c.u1(0, 1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(c.u2(0, 0)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(c.u2(0, 1)), 0.0, 1e-12);
  EXPECT_LT(max_abs_diff(c.canonical_state.matrix(), rho.matrix()), 1e-12);
}

TEST(ToCanonical, BellStateKeepsNegativeThirdEntry) {
  const auto c = to_canonical(testing::bell_psi1());
  EXPECT_NEAR(c.lambda_diag[0], 1.0, 1e-12);
  EXPECT_NEAR(c.lambda_diag[1], 1.0, 1e-12);
  EXPECT_NEAR(c.lambda_diag[2], -1.0, 1e-12);
}

TEST(ToCanonical, MaximallyMixedHasZeroSpectrum) {
  const auto c = to_canonical(TwoQubitState::maximally_mixed());
  for (double v : c.lambda_diag) EXPECT_EQ(v, 0.0);
  EXPECT_FALSE(std::signbit(c.lambda_diag[2]));
}

TEST(ToCanonical, RandomStatesBecomeCanonical) {
  SeededGenerator gen(47);
  for (int i = 0; i < 1000; ++i) {
    const TwoQubitState rho = random_hs_state(gen);
    const auto c = to_canonical(rho);
    EXPECT_TRUE(c.rotation_a.proper());
    EXPECT_TRUE(c.rotation_b.proper());
    const Mat3 lambda = correlation_matrix(c.canonical_state).lambda;
    EXPECT_LT(max_abs(lambda - diag3(c.lambda_diag)), 1e-12);
    EXPECT_TRUE(is_canonical(c.canonical_state));
    EXPECT_NEAR(lambda.determinant(), correlation_matrix(rho).lambda.determinant(), 1e-10);
    EXPECT_GE(c.lambda_diag[0], c.lambda_diag[1]);
    EXPECT_GE(c.lambda_diag[1], std::abs(c.lambda_diag[2]));
  }
}

TEST(ToCanonical, LocalUnitaryInvariantSpectrum) {
  SeededGenerator gen(53);
  for (int i = 0; i < 500; ++i) {
    const TwoQubitState rho = random_hs_state(gen);
    const TwoQubitState moved = testing::apply_local(rho, random_su2(gen), random_su2(gen));
    const Vec3 l0 = to_canonical(rho).lambda_diag;
    const Vec3 l1 = to_canonical(moved).lambda_diag;
    for (std::size_t k = 0; k < 3; ++k) EXPECT_NEAR(l0[k], l1[k], 1e-9);
  }
}

TEST(IsCanonical, ReferenceCases) {
  EXPECT_TRUE(is_canonical(counterexample_state()));
  EXPECT_FALSE(is_canonical(bell_diagonal_state({0.1, 0.5, 0.2})));
  EXPECT_TRUE(is_canonical(TwoQubitState::maximally_mixed()));
  EXPECT_TRUE(is_canonical(testing::bell_psi1()));
  EXPECT_FALSE(is_canonical(bell_diagonal_state({0.6, 0.4, -0.45})));
}

TEST(Mcdm, CanonicalInputGivesXAxis) {
  const MeasurementDirection n = mcdm(to_canonical(bell_diagonal_state({0.6, 0.4, -0.2})));
  EXPECT_NEAR(std::abs(n[0]), 1.0, 1e-14);
}

TEST(Mcdm, TracksRotationOfSubsystemA) {
  const TwoQubitState rho = bell_diagonal_state({0.6, 0.4, -0.2});
  // Quarter turn about y carries the x axis onto the z axis.
  const Matrix2 u = su2_from_so3(axis_rotation({0, 1, 0}, std::numbers::pi / 2));
  const TwoQubitState swapped = testing::apply_local(rho, u, Matrix2::identity());
  const MeasurementDirection n = mcdm(to_canonical(swapped));
  EXPECT_LT(axis_angle(n, MeasurementDirection({0, 0, 1})), 1e-12);
}

TEST(Mcdm, ConditionalEntropyMatchesCanonicalXAxis) {
  SeededGenerator gen(59);
  for (int i = 0; i < 1000; ++i) {
    const TwoQubitState rho = random_hs_state(gen);
    const auto c = to_canonical(rho);
    const double original = conditional_entropy_closed(blocks(rho), mcdm(c));
    const double canonical = conditional_entropy_closed(blocks(c.canonical_state), MeasurementDirection::x_axis());
    EXPECT_NEAR(original, canonical, 1e-10);
  }
}

// The weighted norm sum Lambda_i^2 n_i^2 / 16 peaks on the x axis.
TEST(DeltaNorm, MaximizedOnXAxisForCanonicalStates) {
  SeededGenerator gen(61);
  constexpr int kSteps = 90;
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const auto c = to_canonical(random_hs_state(gen));
    const Vec3 l = c.lambda_diag;
    if (l[0] - l[1] < 1e-6) continue;
    ++checked;
    const double at_x = delta_norm_sq(l, MeasurementDirection::x_axis());
    EXPECT_NEAR(at_x, l[0] * l[0] / 16, 1e-15);
    double best = -1.0;
    MeasurementDirection best_n = MeasurementDirection::x_axis();
    for (int t = 0; t <= kSteps; ++t) {
      for (int p = 0; p < 2 * kSteps; ++p) {
        const auto n = MeasurementDirection::from_angles(std::numbers::pi * t / kSteps,
                                                         -std::numbers::pi / 2 + std::numbers::pi * p / (2 * kSteps));
        const double v = delta_norm_sq(l, n);
        EXPECT_LE(v, l[0] * l[0] / 16 + 1e-15);
        if (v > best) {
          best = v;
          best_n = n;
        }
      }
    }
    EXPECT_LT(axis_angle(best_n, MeasurementDirection::x_axis()), 1e-9);
  }
  EXPECT_GT(checked, 150);
}

TEST(DeltaNorm, ComponentPickOutAndZero) {
  const Vec3 l{0.2, 0.2, 0.1479};
  EXPECT_NEAR(delta_norm_sq(l, MeasurementDirection({0, 0, 1})), 0.1479 * 0.1479 / 16, 1e-17);
  SeededGenerator gen(67);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(delta_norm_sq({0, 0, 0}, random_direction(gen)), 0.0);
}

}  // namespace
}  // namespace qdiscord
