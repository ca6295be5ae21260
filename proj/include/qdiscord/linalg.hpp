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

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>

#include "qdiscord/errors.hpp"

/// Dense linear algebra for one- and two-qubit operators.
///
/// Everything here is fixed-size (2x2 or 4x4 complex, 3-vectors and 3x3 real
/// matrices) and allocation free. Two-qubit operators use the basis order
/// |00>, |01>, |10>, |11> with qubit A as the most significant bit.
namespace qdiscord {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kNegativeEigenvalueClamp = 1e-10;

template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t kDim = N;

  constexpr SquareMatrix() = default;
  constexpr SquareMatrix(std::initializer_list<Complex> row_major) {
    std::size_t k = 0;
    for (const auto& v : row_major) {
      if (k < N * N) data_[k++] = v;
    }
  }

  static constexpr SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  constexpr Complex& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  constexpr const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * N + c];
  }

  std::span<const Complex, N * N> entries() const { return data_; }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  SquareMatrix adjoint() const {
    SquareMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(r, c) = std::conj((*this)(c, r));
    return m;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  SquareMatrix& operator*=(Complex s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, Complex s) { return a *= s; }
  friend SquareMatrix operator*(Complex s, SquareMatrix a) { return a *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex ark = a(r, k);
        if (ark == Complex{}) continue;
        for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::array<Complex, N * N> data_{};
};

using Matrix2 = SquareMatrix<2>;
using Matrix4 = SquareMatrix<4>;

/// Largest entrywise |a - b|.
template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  double d = 0.0;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) d = std::max(d, std::abs(a(r, c) - b(r, c)));
  return d;
}

template <std::size_t N>
bool is_hermitian(const SquareMatrix<N>& m, double tol = kHermitianTol) {
  return max_abs_diff(m, m.adjoint()) <= tol;
}

/// U M U^dagger.
template <std::size_t N>
SquareMatrix<N> conjugate(const SquareMatrix<N>& u, const SquareMatrix<N>& m) {
  return u * m * u.adjoint();
}

Matrix4 kron(const Matrix2& a, const Matrix2& b);

/// Pauli operators sigma_0 (identity), sigma_1 = x, sigma_2 = y, sigma_3 = z.
const Matrix2& pauli(std::size_t i);

// ---------------------------------------------------------------------------
// Real 3-vectors and 3x3 matrices (Bloch vectors, correlation blocks).

using Vec3 = std::array<double, 3>;

struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  static Mat3 identity() { return Mat3{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}; }
  double& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
  double operator()(std::size_t r, std::size_t c) const { return m[r][c]; }

  Mat3 transpose() const;
  double determinant() const;
  Vec3 column(std::size_t c) const { return {m[0][c], m[1][c], m[2][c]}; }
  Vec3 row(std::size_t r) const { return m[r]; }
  void set_column(std::size_t c, const Vec3& v) {
    for (std::size_t r = 0; r < 3; ++r) m[r][c] = v[r];
  }

  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend Vec3 operator*(const Mat3& a, const Vec3& v);
  friend Mat3 operator-(const Mat3& a, const Mat3& b);
  friend bool operator==(const Mat3&, const Mat3&) = default;
};

double dot(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& v);
Mat3 outer(const Vec3& a, const Vec3& b);
double frobenius_norm(const Mat3& m);
double max_abs(const Mat3& m);

/// Proper or improper orthogonal 3x3 matrix.
class Rotation3 {
 public:
  /// Throws ValidationError unless O^T O = I within 1e-12.
  explicit Rotation3(const Mat3& o, double tol = 1e-12);

  static Rotation3 identity() { return Rotation3(Mat3::identity()); }

  const Mat3& matrix() const { return o_; }
  bool proper() const { return proper_; }
  Rotation3 transpose() const { return Rotation3(o_.transpose()); }

  friend Rotation3 operator*(const Rotation3& a, const Rotation3& b) {
    return Rotation3(a.o_ * b.o_, 1e-10);
  }

 private:
  Mat3 o_;
  bool proper_ = true;
};

/// Rotation about a unit axis by `angle` radians (right-handed).
Rotation3 axis_rotation(const Vec3& axis, double angle);

// ---------------------------------------------------------------------------
// Spectra and entropies.

/// Ascending eigenvalues of a Hermitian matrix. 2x2 is closed form; 4x4 uses
/// cyclic complex Jacobi. Throws ValidationError for non-Hermitian input.
std::array<double, 2> eigvals_hermitian(const Matrix2& m);
std::array<double, 4> eigvals_hermitian(const Matrix4& m);

/// Unit-trace positive semidefinite Hermitian matrix with its cached spectrum.
template <std::size_t N>
class DensityMatrix {
 public:
  /// Validates hermiticity, trace and positivity. Eigenvalues in
  /// [-1e-10, 0) are clamped to zero; anything more negative is rejected.
  explicit DensityMatrix(const SquareMatrix<N>& m, double trace_tol = kTraceTol);

  static DensityMatrix maximally_mixed() {
    return DensityMatrix(SquareMatrix<N>::identity() * Complex(1.0 / N));
  }

  const SquareMatrix<N>& matrix() const { return m_; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  /// Ascending, clamped to be non-negative.
  const std::array<double, N>& spectrum() const { return spectrum_; }

 private:
  SquareMatrix<N> m_;
  std::array<double, N> spectrum_{};
};

using QubitState = DensityMatrix<2>;
using TwoQubitState = DensityMatrix<4>;

/// Entropy in bits of a probability list; 0 log 0 := 0.
double shannon_entropy(std::span<const double> probabilities);

template <std::size_t N>
double von_neumann_entropy(const DensityMatrix<N>& rho) {
  return shannon_entropy(rho.spectrum());
}

/// h(x) = H2((1+x)/2). Inputs with |x| in (1, 1+1e-12] are clamped; larger
/// magnitudes throw DomainError.
double binary_entropy_h(double x);

enum class Subsystem { A, B };

/// Reduced state of the kept qubit.
QubitState partial_trace(const TwoQubitState& rho, Subsystem keep);
/// Linear partial trace for arbitrary (not necessarily physical) operators.
Matrix2 partial_trace(const Matrix4& m, Subsystem keep);

/// Lifts a proper rotation to U in SU(2) with U^dagger sigma_i U =
/// sum_j O_ij sigma_j. The sign of U is fixed by a non-negative scalar
/// quaternion part. Throws ValidationError for improper rotations.
Matrix2 su2_from_so3(const Rotation3& o);

/// Inverse map: the rotation O with U^dagger sigma_i U = sum_j O_ij sigma_j.
Rotation3 so3_from_su2(const Matrix2& u);

}  // namespace qdiscord
