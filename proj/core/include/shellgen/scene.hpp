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

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "shellgen/camera.hpp"
#include "shellgen/mesh.hpp"
#include "shellgen/rng.hpp"

namespace shellgen {

/// Closed interval [lo, hi]; lo == hi is a constant.
struct Range {
  double lo = 0.0;
  double hi = 0.0;

  [[nodiscard]] double sample(Rng& rng) const { return rng.uniform(lo, hi); }
  bool operator==(const Range&) const = default;
};

/// world = translation + uniform_scale * (rotation * local)
struct InstancePose {
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();
  Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity();
  double uniform_scale = 1.0;
  std::uint32_t instance_id = 0;

  [[nodiscard]] Eigen::Vector3d apply(const Eigen::Vector3d& local) const {
    return translation + uniform_scale * (rotation * local);
  }
};

struct SceneParams {
  int instance_count = 10;
  /// Largest projected dimension as a percentage of image width.
  Range scale_percent{25.0, 30.0};
  Range yaw{0.0, 2.0 * std::numbers::pi};
  Range pitch{-15.0 * std::numbers::pi / 180.0, 15.0 * std::numbers::pi / 180.0};
  Range roll{-15.0 * std::numbers::pi / 180.0, 15.0 * std::numbers::pi / 180.0};
  /// Allowed lens area between two ground bounding circles, as a fraction of the smaller circle.
  double max_overlap_fraction = 0.1;
  GroundRect extent;
  double ground_z = 0.0;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct SceneInstance {
  std::size_t mesh_index = 0;
  InstancePose pose;
  /// Ground bounding circle (centre = translation xy).
  double footprint_radius = 0.0;
  /// True when no attempt met the overlap limit and the best attempt was kept.
  bool best_effort = false;
};

struct Scene {
  double ground_z = 0.0;
  GroundRect extent;
  std::uint64_t seed = 0;
  std::vector<std::shared_ptr<const ShellMesh>> meshes;
  std::vector<SceneInstance> instances;

  [[nodiscard]] const ShellMesh& mesh_of(const SceneInstance& inst) const {
    return *meshes.at(inst.mesh_index);
  }
};

/// Rejection attempts per instance before the best attempt is accepted.
inline constexpr int kPlacementAttempts = 100;

/// Copy of `mesh` translated so its xy bounding-box centre is at the origin.
[[nodiscard]] ShellMesh center_mesh_xy(const ShellMesh& mesh);

/// Random pose with the mesh resting on the ground and its largest projected
/// dimension set to the drawn percentage of image width at ground depth.
/// Draw order: yaw, pitch, roll, scale percent, x, y. The returned pose has
/// instance_id 0. Throws std::invalid_argument for an empty mesh.
[[nodiscard]] InstancePose sample_pose(Rng& rng, const SceneParams& params, const Camera& camera,
                                       const ShellMesh& mesh);

/// Radius of the ground-projected bounding circle around translation.xy.
[[nodiscard]] double footprint_radius(const ShellMesh& mesh, const InstancePose& pose);

/// Lens area of two circles over the area of the smaller one; 0 when disjoint.
[[nodiscard]] double circle_overlap_fraction(const Eigen::Vector2d& c0, double r0,
                                             const Eigen::Vector2d& c1, double r1);

/// Places params.instance_count instances; ids are 1..N in placement order.
/// Meshes are re-centred in xy (center_mesh_xy) before placement.
[[nodiscard]] Scene compose_scene(const std::vector<ShellMesh>& meshes, const SceneParams& params,
                                  const Camera& camera, std::uint64_t seed);
[[nodiscard]] Scene compose_scene(std::vector<std::shared_ptr<const ShellMesh>> meshes,
                                  const SceneParams& params, const Camera& camera,
                                  std::uint64_t seed);

/// One line per instance: id mesh tx ty tz qw qx qy qz scale radius best_effort,
/// 17 significant digits.
void write_poses(const Scene& scene, std::ostream& out);

}  // namespace shellgen
