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

#include "qdiscord/fano_bloch.hpp"

#include <cmath>
#include <string>

namespace qdiscord {
namespace {

constexpr double kImaginaryResidueTol = 1e-8;
constexpr double kReconstructNegativeTol = 1e-8;

const std::array<std::array<Matrix4, 4>, 4>& pauli_products() {
  static const auto table = [] {
    std::array<std::array<Matrix4, 4>, 4> t;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) t[i][j] = kron(pauli(i), pauli(j));
    return t;
  }();
  return table;
}

// Tr(A B) without forming the product.
Complex trace_of_product(const Matrix4& a, const Matrix4& b) {
  Complex t = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < 4; ++k) t += a(r, k) * b(k, r);
  return t;
}

}  // namespace

FanoBlochTensor::FanoBlochTensor(const Table& tau) : tau_(tau) {
  if (std::abs(tau[0][0] - 1.0) > 1e-12) {
    throw ValidationError("tau[0][0] must be 1 (unit trace)");
  }
  for (const auto& row : tau)
    for (double v : row)
      if (!(std::abs(v) <= 1.0 + 1e-10)) {
        throw ValidationError("Fano-Bloch coefficient " + std::to_string(v) + " outside [-1, 1]");
      }
}

FanoBlochTensor decompose(const TwoQubitState& rho) {
  const auto& basis = pauli_products();
  FanoBlochTensor::Table tau{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const Complex v = trace_of_product(basis[i][j], rho.matrix());
      if (std::abs(v.imag()) > kImaginaryResidueTol) {
        throw ValidationError("non-Hermitian input: Pauli expectation has imaginary part " +
                              std::to_string(v.imag()));
      }
      tau[i][j] = v.real();
    }
  }
  // Exact unit trace was checked by the state; drop rounding noise.
  tau[0][0] = 1.0;
  return FanoBlochTensor(tau);
}

TwoQubitState reconstruct(const FanoBlochTensor& tau) {
  const auto& basis = pauli_products();
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (tau(i, j) == 0.0) continue;
      m += basis[i][j] * Complex(0.25 * tau(i, j));
    }
  const auto ev = eigvals_hermitian(m);
  if (ev.front() < -kReconstructNegativeTol) {
    throw NotAStateError("Fano-Bloch tensor is outside the state space (eigenvalue " +
                         std::to_string(ev.front()) + ")");
  }
  return TwoQubitState(m);
}

BlockDecomposition blocks(const FanoBlochTensor& tau) {
  BlockDecomposition d;
  for (std::size_t i = 0; i < 3; ++i) {
    d.a[i] = tau(i + 1, 0);
    d.b[i] = tau(0, i + 1);
    for (std::size_t j = 0; j < 3; ++j) d.r(i, j) = tau(i + 1, j + 1);
  }
  return d;
}

CorrelationMatrix correlation_matrix(const BlockDecomposition& blocks) {
  return {blocks.r - outer(blocks.a, blocks.b)};
}

CorrelationMatrix correlation_matrix(const TwoQubitState& rho) {
  return correlation_matrix(blocks(rho));
}

}  // namespace qdiscord
