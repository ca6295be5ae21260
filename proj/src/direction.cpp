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

#include "qdiscord/direction.hpp"

#include <cmath>

namespace qdiscord {

MeasurementDirection::MeasurementDirection(const Vec3& n) : n_(n) {
  if (!(std::abs(norm(n) - 1.0) <= 1e-12)) {
    throw ValidationError("measurement direction must be a unit vector");
  }
}

MeasurementDirection MeasurementDirection::normalized(const Vec3& v) {
  const double len = norm(v);
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw ValidationError("cannot normalize a zero or non-finite vector");
  }
  return MeasurementDirection((1.0 / len) * v);
}

MeasurementDirection MeasurementDirection::from_angles(double theta, double phi) {
  const double s = std::sin(theta);
  return normalized({s * std::cos(phi), s * std::sin(phi), std::cos(theta)});
}

MeasurementDirection MeasurementDirection::hemisphere() const {
  const auto [x, y, z] = n_;
  if (x > 0.0) return *this;
  if (x < 0.0) return flipped();
  if (y < 0.0) return *this;
  if (y > 0.0) return flipped();
  return MeasurementDirection({0.0, 0.0, 1.0});
}

double MeasurementDirection::theta() const {
  const auto h = hemisphere();
  return std::acos(std::clamp(h.n_[2], -1.0, 1.0));
}

double MeasurementDirection::phi() const {
  const auto h = hemisphere();
  if (h.n_[0] == 0.0 && h.n_[1] == 0.0) return 0.0;
  return std::atan2(h.n_[1], h.n_[0]);
}

double axis_angle(const MeasurementDirection& a, const MeasurementDirection& b) {
  return std::acos(std::min(1.0, std::abs(dot(a.vector(), b.vector()))));
}

}  // namespace qdiscord
