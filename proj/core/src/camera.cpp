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

#include "shellgen/camera.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace shellgen {

void Camera::validate() const {
  if (!(focal_length_px > 0.0)) throw std::invalid_argument("camera focal_length_px must be > 0");
  if (width <= 0 || height <= 0) throw std::invalid_argument("camera image size must be positive");
  if (std::abs(orientation.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("camera orientation must be a unit quaternion");
  }
}

std::optional<Projection> project(const Camera& camera, const Eigen::Vector3d& point) {
  const Eigen::Vector3d c = camera.to_camera(point);
  if (c.z() <= kNearDepth) return std::nullopt;
  Projection p;
  p.pixel = Eigen::Vector2d(camera.focal_length_px * c.x() / c.z() + camera.principal_point.x(),
                            camera.focal_length_px * c.y() / c.z() + camera.principal_point.y());
  p.depth = c.z();
  return p;
}

Camera top_down_camera(const GroundRect& view, double ground_z, int width, int height,
                       double focal_length_px) {
  Camera cam;
  cam.width = width;
  cam.height = height;
  cam.focal_length_px = focal_length_px;
  cam.principal_point = Eigen::Vector2d(0.5 * width, 0.5 * height);
  // 180 degrees about world x: camera +z looks down, image +y points to world -y.
  cam.orientation = Eigen::Quaterniond(0.0, 1.0, 0.0, 0.0);
  const double span_x = view.x_max - view.x_min;
  const double span_y = view.y_max - view.y_min;
  const double h = std::max(focal_length_px * span_x / width, focal_length_px * span_y / height);
  cam.position = Eigen::Vector3d(0.5 * (view.x_min + view.x_max), 0.5 * (view.y_min + view.y_max),
                                 ground_z + h);
  return cam;
}

}  // namespace shellgen
