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

#include "qdiscord/linalg.hpp"

#include <cmath>
#include <string>

namespace qdiscord {
namespace {

constexpr double kJacobiOffTol = 1e-14;
constexpr int kJacobiMaxSweeps = 64;

template <std::size_t N>
double max_abs_entry(const SquareMatrix<N>& m) {
  double x = 0.0;
  for (const auto& v : m.entries()) x = std::max(x, std::abs(v));
  return x;
}

template <std::size_t N>
void require_hermitian(const SquareMatrix<N>& m) {
  const double tol = kHermitianTol * std::max(1.0, max_abs_entry(m));
  if (!is_hermitian(m, tol)) {
    throw ValidationError("matrix is not Hermitian (max |M - M^dagger| = " +
                          std::to_string(max_abs_diff(m, m.adjoint())) + ")");
  }
}

template <std::size_t N>
SquareMatrix<N> hermitian_part(const SquareMatrix<N>& m) {
  SquareMatrix<N> h = m + m.adjoint();
  h *= 0.5;
  for (std::size_t i = 0; i < N; ++i) h(i, i) = h(i, i).real();
  return h;
}

}  // namespace

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

const Matrix2& pauli(std::size_t i) {
  using namespace std::complex_literals;
  static const std::array<Matrix2, 4> kPauli = {
      Matrix2{1.0, 0.0, 0.0, 1.0},
      Matrix2{0.0, 1.0, 1.0, 0.0},
      Matrix2{0.0, -1.0i, 1.0i, 0.0},
      Matrix2{1.0, 0.0, 0.0, -1.0},
  };
  if (i > 3) throw ValidationError("Pauli index out of range");
  return kPauli[i];
}

// ---------------------------------------------------------------------------

Mat3 Mat3::transpose() const {
  Mat3 t;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) t.m[r][c] = m[c][r];
  return t;
}

double Mat3::determinant() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 p;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      for (std::size_t k = 0; k < 3; ++k) p.m[r][c] += a.m[r][k] * b.m[k][c];
  return p;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
  Vec3 out{};
  for (std::size_t r = 0; r < 3; ++r)
    out[r] = a.m[r][0] * v[0] + a.m[r][1] * v[1] + a.m[r][2] * v[2];
  return out;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 d;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) d.m[r][c] = a.m[r][c] - b.m[r][c];
  return d;
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(double s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }

Mat3 outer(const Vec3& a, const Vec3& b) {
  Mat3 o;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) o.m[r][c] = a[r] * b[c];
  return o;
}

double frobenius_norm(const Mat3& m) {
  double s = 0.0;
  for (const auto& row : m.m)
    for (double v : row) s += v * v;
  return std::sqrt(s);
}

double max_abs(const Mat3& m) {
  double x = 0.0;
  for (const auto& row : m.m)
    for (double v : row) x = std::max(x, std::abs(v));
  return x;
}

Rotation3::Rotation3(const Mat3& o, double tol) : o_(o) {
  const Mat3 gram = o.transpose() * o;
  if (max_abs(gram - Mat3::identity()) > tol) {
    throw ValidationError("matrix is not orthogonal");
  }
  proper_ = o.determinant() > 0.0;
}

Rotation3 axis_rotation(const Vec3& axis, double angle) {
  const double len = norm(axis);
  if (len == 0.0) throw ValidationError("rotation axis must be non-zero");
  const Vec3 k = (1.0 / len) * axis;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double v = 1.0 - c;
  Mat3 r;
  r.m = {{{c + k[0] * k[0] * v, k[0] * k[1] * v - k[2] * s, k[0] * k[2] * v + k[1] * s},
          {k[1] * k[0] * v + k[2] * s, c + k[1] * k[1] * v, k[1] * k[2] * v - k[0] * s},
          {k[2] * k[0] * v - k[1] * s, k[2] * k[1] * v + k[0] * s, c + k[2] * k[2] * v}}};
  return Rotation3(r, 1e-10);
}

// ---------------------------------------------------------------------------

std::array<double, 2> eigvals_hermitian(const Matrix2& m) {
  require_hermitian(m);
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(b));
  return {mean - radius, mean + radius};
}

std::array<double, 4> eigvals_hermitian(const Matrix4& m) {
  require_hermitian(m);
  Matrix4 a = hermitian_part(m);

  double fro2 = 0.0;
  for (const auto& v : a.entries()) fro2 += std::norm(v);
  const double stop = kJacobiOffTol * std::max(1.0, std::sqrt(fro2));

  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    double off2 = 0.0;
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = p + 1; q < 4; ++q) off2 += 2.0 * std::norm(a(p, q));
    if (std::sqrt(off2) <= stop) break;

    for (std::size_t p = 0; p < 4; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        const Complex b = a(p, q);
        const double r = std::abs(b);
        if (r == 0.0) continue;
        // Remove the phase of a(p,q), then apply a real Jacobi rotation.
        const Complex phase_conj = std::conj(b) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(1.0, theta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = t * c;

        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * phase_conj;
        const Complex gqq = c * phase_conj;
        for (std::size_t k = 0; k < 4; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (std::size_t k = 0; k < 4; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::array<double, 4> ev{};
  for (std::size_t i = 0; i < 4; ++i) ev[i] = a(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

template <std::size_t N>
DensityMatrix<N>::DensityMatrix(const SquareMatrix<N>& m, double trace_tol) {
  require_hermitian(m);
  m_ = hermitian_part(m);
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > trace_tol) {
    throw NotAStateError("trace is " + std::to_string(tr) + ", expected 1");
  }
  spectrum_ = eigvals_hermitian(m_);
  if (spectrum_.front() < -kNegativeEigenvalueClamp) {
    throw NotAStateError("matrix has negative eigenvalue " + std::to_string(spectrum_.front()));
  }
  for (double& v : spectrum_) v = std::max(v, 0.0);
}

template class DensityMatrix<2>;
template class DensityMatrix<4>;

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

double binary_entropy_h(double x) {
  const double ax = std::abs(x);
  if (ax > 1.0 + 1e-12) {
    throw DomainError("binary entropy argument " + std::to_string(x) + " outside [-1, 1]");
  }
  if (ax >= 1.0) return 0.0;
  const double p = 0.5 * (1.0 + ax);
  const double q = 0.5 * (1.0 - ax);
  return -p * std::log2(p) - q * std::log2(q);
}

Matrix2 partial_trace(const Matrix4& m, Subsystem keep) {
  Matrix2 r;
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      for (std::size_t k = 0; k < 2; ++k) {
        r(x, y) += keep == Subsystem::A ? m(2 * x + k, 2 * y + k) : m(2 * k + x, 2 * k + y);
      }
    }
  }
  return r;
}

QubitState partial_trace(const TwoQubitState& rho, Subsystem keep) {
  return QubitState(partial_trace(rho.matrix(), keep), 1e-10);
}

Matrix2 su2_from_so3(const Rotation3& rotation) {
  if (!rotation.proper()) {
    throw ValidationError("only proper rotations (det = +1) lift to SU(2)");
  }
  const Mat3& r = rotation.matrix();
  const double tr = r(0, 0) + r(1, 1) + r(2, 2);
  double w, x, y, z;
  // Pick the largest quaternion component as pivot.
  if (tr >= r(0, 0) && tr >= r(1, 1) && tr >= r(2, 2)) {
    const double s = 2.0 * std::sqrt(std::max(0.0, 1.0 + tr));
    w = 0.25 * s;
    x = (r(2, 1) - r(1, 2)) / s;
    y = (r(0, 2) - r(2, 0)) / s;
    z = (r(1, 0) - r(0, 1)) / s;
  } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    const double s = 2.0 * std::sqrt(std::max(0.0, 1.0 + r(0, 0) - r(1, 1) - r(2, 2)));
    w = (r(2, 1) - r(1, 2)) / s;
    x = 0.25 * s;
    y = (r(0, 1) + r(1, 0)) / s;
    z = (r(0, 2) + r(2, 0)) / s;
  } else if (r(1, 1) >= r(2, 2)) {
    const double s = 2.0 * std::sqrt(std::max(0.0, 1.0 + r(1, 1) - r(0, 0) - r(2, 2)));
    w = (r(0, 2) - r(2, 0)) / s;
    x = (r(0, 1) + r(1, 0)) / s;
    y = 0.25 * s;
    z = (r(1, 2) + r(2, 1)) / s;
  } else {
    const double s = 2.0 * std::sqrt(std::max(0.0, 1.0 + r(2, 2) - r(0, 0) - r(1, 1)));
    w = (r(1, 0) - r(0, 1)) / s;
    x = (r(0, 2) + r(2, 0)) / s;
    y = (r(1, 2) + r(2, 1)) / s;
    z = 0.25 * s;
  }
  const double len = std::sqrt(w * w + x * x + y * y + z * z);
  w /= len;
  x /= len;
  y /= len;
  z /= len;
  if (w < 0.0) {
    w = -w;
    x = -x;
    y = -y;
    z = -z;
  }
  // U = w 1 - i (x sigma_x + y sigma_y + z sigma_z)
  return Matrix2{Complex(w, -z), Complex(-y, -x), Complex(y, -x), Complex(w, z)};
}

Rotation3 so3_from_su2(const Matrix2& u) {
  Mat3 o;
  for (std::size_t i = 0; i < 3; ++i) {
    const Matrix2 rotated = u.adjoint() * pauli(i + 1) * u;
    for (std::size_t j = 0; j < 3; ++j) {
      o(i, j) = 0.5 * (rotated * pauli(j + 1)).trace().real();
    }
  }
  return Rotation3(o, 1e-10);
}

}  // namespace qdiscord
