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

#include "qdiscord/linalg.hpp"

namespace qdiscord {

/// Unit Bloch vector n of a von Neumann measurement {(1 +- n.sigma)/2} on
/// qubit A. n and -n describe the same measurement with outcomes relabeled.
///
/// Angles use the hemisphere chart theta in [0, pi), phi in [-pi/2, pi/2)
/// with n = (sin t cos p, sin t sin p, cos t).
class MeasurementDirection {
 public:
  /// Throws ValidationError unless |n| = 1 within 1e-12.
  explicit MeasurementDirection(const Vec3& n);

  /// Normalizes any non-zero vector.
  static MeasurementDirection normalized(const Vec3& v);
  static MeasurementDirection from_angles(double theta, double phi);
  static MeasurementDirection x_axis() { return MeasurementDirection({1.0, 0.0, 0.0}); }

  const Vec3& vector() const { return n_; }
  double operator[](std::size_t i) const { return n_[i]; }

  MeasurementDirection flipped() const { return MeasurementDirection({-n_[0], -n_[1], -n_[2]}); }
  /// The representative of {n, -n} that lies in the hemisphere chart.
  MeasurementDirection hemisphere() const;
  double theta() const;
  double phi() const;

 private:
  Vec3 n_;
};

/// Angle in [0, pi/2] between the measurement axes +-a and +-b.
double axis_angle(const MeasurementDirection& a, const MeasurementDirection& b);

}  // namespace qdiscord
