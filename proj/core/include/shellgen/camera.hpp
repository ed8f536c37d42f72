// Copyright 2026 The Shellgen Authors.
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

#include <optional>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace shellgen {

/// Axis-aligned rectangle on the ground plane.
struct GroundRect {
  double x_min = -50.0;
  double x_max = 50.0;
  double y_min = -50.0;
  double y_max = 50.0;

  [[nodiscard]] bool contains(double x, double y) const noexcept {
    return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
  }
  bool operator==(const GroundRect&) const = default;
};

/// Pinhole camera. `orientation` maps camera axes to world axes; the camera
/// frame has +x to the right of the image, +y down, +z along the view direction.
struct Camera {
  Eigen::Vector3d position = Eigen::Vector3d(0.0, 0.0, 100.0);
  Eigen::Quaterniond orientation = Eigen::Quaterniond(0.0, 1.0, 0.0, 0.0);
  double focal_length_px = 256.0;
  Eigen::Vector2d principal_point = Eigen::Vector2d(128.0, 128.0);
  int width = 256;
  int height = 256;

  /// Throws std::invalid_argument on non-positive intrinsics or a non-unit orientation.
  void validate() const;

  [[nodiscard]] Eigen::Vector3d to_camera(const Eigen::Vector3d& world) const {
    return orientation.conjugate() * (world - position);
  }
};

/// Projected pixel coordinates plus camera-frame depth.
struct Projection {
  Eigen::Vector2d pixel;
  double depth = 0.0;
};

/// Camera-frame depth at or below this counts as behind the camera.
inline constexpr double kNearDepth = 1e-6;

/// Pinhole projection; std::nullopt for points behind the camera.
[[nodiscard]] std::optional<Projection> project(const Camera& camera, const Eigen::Vector3d& point);

/// Straight-down view centred on `view` at the height where `view` just fills
/// the image (the larger of the two spans decides).
[[nodiscard]] Camera top_down_camera(const GroundRect& view, double ground_z, int width, int height,
                                     double focal_length_px);

}  // namespace shellgen
