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

#include "qdiscord/ensembles.hpp"

#include <cmath>
#include <numbers>

namespace qdiscord {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// E1 = diag(1,0,0,1), E2 = diag(0,1,1,0): entry (r,c) survives iff r and c
// belong to the same block.
bool in_x_pattern(std::size_t r, std::size_t c) {
  const bool r_outer = (r == 0 || r == 3);
  const bool c_outer = (c == 0 || c == 3);
  return r_outer == c_outer;
}

}  // namespace

SeededGenerator::SeededGenerator(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed),
      stream_(stream),
      engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0xD1B54A32D192ED03ULL))) {}

double SeededGenerator::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededGenerator::normal() {
  if (spare_normal_) {
    const double v = *spare_normal_;
    spare_normal_.reset();
    return v;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_normal_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

TwoQubitState random_hs_state(SeededGenerator& gen) {
  Matrix4 g;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) g(r, c) = gen.complex_normal();
  const Matrix4 w = g * g.adjoint();
  return TwoQubitState(w * Complex(1.0 / w.trace().real()), 1e-10);
}

QubitState random_qubit_state(SeededGenerator& gen) {
  Matrix2 g;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) g(r, c) = gen.complex_normal();
  const Matrix2 w = g * g.adjoint();
  return QubitState(w * Complex(1.0 / w.trace().real()), 1e-10);
}

Matrix2 random_su2(SeededGenerator& gen) {
  std::array<double, 4> q{};
  double len2 = 0.0;
  while (len2 < 1e-12) {
    len2 = 0.0;
    for (double& v : q) {
      v = gen.normal();
      len2 += v * v;
    }
  }
  const double s = 1.0 / std::sqrt(len2);
  const double w = q[0] * s, x = q[1] * s, y = q[2] * s, z = q[3] * s;
  return Matrix2{Complex(w, -z), Complex(-y, -x), Complex(y, -x), Complex(w, z)};
}

MeasurementDirection random_direction(SeededGenerator& gen) {
  for (;;) {
    const Vec3 v{gen.normal(), gen.normal(), gen.normal()};
    if (norm(v) > 1e-8) return MeasurementDirection::normalized(v);
  }
}

Vec3 random_bell_diagonal_coefficients(SeededGenerator& gen) {
  // Dirichlet(1,1,1,1) weights over |Phi+>, |Phi->, |Psi+>, |Psi->.
  constexpr std::array<Vec3, 4> kBell = {{{1, -1, 1}, {-1, 1, 1}, {1, 1, -1}, {-1, -1, -1}}};
  std::array<double, 4> w{};
  double total = 0.0;
  for (double& v : w) {
    v = -std::log(1.0 - gen.uniform());
    total += v;
  }
  Vec3 c{};
  for (std::size_t k = 0; k < 4; ++k) c = c + (w[k] / total) * kBell[k];
  return c;
}

TwoQubitState project_x_state(const TwoQubitState& rho) {
  Matrix4 m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (in_x_pattern(r, c)) m(r, c) = rho(r, c);
  return TwoQubitState(m, 1e-10);
}

TwoQubitState pure_state(const std::array<Complex, 4>& amplitudes) {
  double len2 = 0.0;
  for (const auto& a : amplitudes) len2 += std::norm(a);
  if (std::abs(len2 - 1.0) > 1e-12) throw ValidationError("state vector must be normalized");
  Matrix4 m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = amplitudes[r] * std::conj(amplitudes[c]);
  return TwoQubitState(m);
}

TwoQubitState mixture_family(double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw DomainError("mixing weight q must lie in [0, 1]");
  }
  const double s = std::numbers::sqrt2 / 2.0;
  const Matrix4 psi0 = pure_state({s, 0.0, s, 0.0}).matrix();
  const Matrix4 psi1 = pure_state({0.0, s, s, 0.0}).matrix();
  return TwoQubitState(psi0 * Complex(1.0 - q) + psi1 * Complex(q));
}

TwoQubitState counterexample_state() {
  Matrix4 m;
  m(0, 0) = 0.0783;
  m(1, 1) = 0.1250;
  m(1, 2) = 0.1000;
  m(2, 1) = 0.1000;
  m(2, 2) = 0.1250;
  m(3, 3) = 0.6717;
  return TwoQubitState(m, 1e-4);
}

TwoQubitState product_state(const QubitState& a, const QubitState& b) {
  return TwoQubitState(kron(a.matrix(), b.matrix()), 1e-10);
}

}  // namespace qdiscord
