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

#include "shellgen/scene.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace shellgen {

void SceneParams::validate() const {
  auto fail = [](const char* field, const char* why) {
    throw std::invalid_argument(std::string(field) + ": " + why);
  };
  if (instance_count < 1) fail("instance_count", "must be >= 1");
  if (!(scale_percent.lo > 0.0 && scale_percent.hi <= 100.0 && scale_percent.lo <= scale_percent.hi)) {
    fail("scale_percent", "must lie within (0, 100] with lo <= hi");
  }
  if (!(yaw.lo <= yaw.hi)) fail("yaw", "lo must be <= hi");
  if (!(pitch.lo <= pitch.hi)) fail("pitch", "lo must be <= hi");
  if (!(roll.lo <= roll.hi)) fail("roll", "lo must be <= hi");
  if (!(max_overlap_fraction >= 0.0 && max_overlap_fraction <= 1.0)) {
    fail("max_overlap_fraction", "must be in [0, 1]");
  }
  if (!(extent.x_min <= extent.x_max)) fail("extent_x", "min must be <= max");
  if (!(extent.y_min <= extent.y_max)) fail("extent_y", "min must be <= max");
}

ShellMesh center_mesh_xy(const ShellMesh& mesh) {
  if (mesh.vertices.empty()) return mesh;
  Eigen::Vector3d lo = mesh.vertices.front();
  Eigen::Vector3d hi = lo;
  for (const auto& v : mesh.vertices) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  const Eigen::Vector3d shift(0.5 * (lo.x() + hi.x()), 0.5 * (lo.y() + hi.y()), 0.0);
  ShellMesh out = mesh;
  for (auto& v : out.vertices) v -= shift;
  return out;
}

InstancePose sample_pose(Rng& rng, const SceneParams& params, const Camera& camera,
                         const ShellMesh& mesh) {
  if (mesh.vertices.empty()) throw std::invalid_argument("sample_pose needs a non-empty mesh");
  const double yaw = params.yaw.sample(rng);
  const double pitch = params.pitch.sample(rng);
  const double roll = params.roll.sample(rng);
  const double percent = params.scale_percent.sample(rng);
  const double x = rng.uniform(params.extent.x_min, params.extent.x_max);
  const double y = rng.uniform(params.extent.y_min, params.extent.y_max);

  InstancePose pose;
  pose.rotation = (Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()) *
                   Eigen::AngleAxisd(pitch, Eigen::Vector3d::UnitY()) *
                   Eigen::AngleAxisd(roll, Eigen::Vector3d::UnitX()))
                      .normalized();

  Eigen::Vector3d lo = Eigen::Vector3d::Constant(std::numeric_limits<double>::infinity());
  Eigen::Vector3d hi = -lo;
  for (const auto& v : mesh.vertices) {
    const Eigen::Vector3d w = pose.rotation * v;
    lo = lo.cwiseMin(w);
    hi = hi.cwiseMax(w);
  }
  const double largest = std::max(hi.x() - lo.x(), hi.y() - lo.y());

  const Eigen::Vector3d ground_point(x, y, params.ground_z);
  double depth = camera.to_camera(ground_point).z();
  if (depth <= kNearDepth) depth = (ground_point - camera.position).norm();
  const double target_px = percent / 100.0 * camera.width;
  pose.uniform_scale =
      largest > 0.0 ? target_px * depth / (camera.focal_length_px * largest) : 1.0;
  pose.translation = Eigen::Vector3d(x, y, params.ground_z - pose.uniform_scale * lo.z());
  return pose;
}

double footprint_radius(const ShellMesh& mesh, const InstancePose& pose) {
  double r2 = 0.0;
  for (const auto& v : mesh.vertices) {
    const Eigen::Vector3d w = pose.uniform_scale * (pose.rotation * v);
    r2 = std::max(r2, w.head<2>().squaredNorm());
  }
  return std::sqrt(r2);
}

double circle_overlap_fraction(const Eigen::Vector2d& c0, double r0, const Eigen::Vector2d& c1,
                               double r1) {
  const double d = (c1 - c0).norm();
  const double small = std::min(r0, r1);
  const double big = std::max(r0, r1);
  if (small <= 0.0 || d >= r0 + r1) return 0.0;
  if (d <= big - small) return 1.0;
  // Circular lens area.
  const double a0 = r0 * r0 * std::acos(std::clamp((d * d + r0 * r0 - r1 * r1) / (2 * d * r0), -1.0, 1.0));
  const double a1 = r1 * r1 * std::acos(std::clamp((d * d + r1 * r1 - r0 * r0) / (2 * d * r1), -1.0, 1.0));
  const double k = std::sqrt(std::max(0.0, (-d + r0 + r1) * (d + r0 - r1) * (d - r0 + r1) * (d + r0 + r1)));
  const double lens = a0 + a1 - 0.5 * k;
  return std::clamp(lens / (std::numbers::pi * small * small), 0.0, 1.0);
}

Scene compose_scene(std::vector<std::shared_ptr<const ShellMesh>> meshes, const SceneParams& params,
                    const Camera& camera, std::uint64_t seed) {
  params.validate();
  camera.validate();
  if (meshes.empty()) throw std::invalid_argument("compose_scene needs at least one mesh");
  for (auto& m : meshes) {
    if (!m || m->vertices.empty()) throw std::invalid_argument("compose_scene got an empty mesh");
    m = std::make_shared<const ShellMesh>(center_mesh_xy(*m));
  }

  Scene scene;
  scene.ground_z = params.ground_z;
  scene.extent = params.extent;
  scene.seed = seed;
  scene.meshes = std::move(meshes);

  Rng rng = Rng::child(seed, "scene");
  const auto mesh_count = static_cast<std::int64_t>(scene.meshes.size());
  for (int n = 0; n < params.instance_count; ++n) {
    SceneInstance best;
    best.mesh_index = static_cast<std::size_t>(rng.uniform_int(0, mesh_count - 1));
    const ShellMesh& mesh = *scene.meshes[best.mesh_index];
    double best_overlap = std::numeric_limits<double>::infinity();
    for (int attempt = 0; attempt < kPlacementAttempts; ++attempt) {
      const InstancePose pose = sample_pose(rng, params, camera, mesh);
      const double radius = footprint_radius(mesh, pose);
      double worst = 0.0;
      for (const SceneInstance& other : scene.instances) {
        worst = std::max(worst, circle_overlap_fraction(pose.translation.head<2>(), radius,
                                                        other.pose.translation.head<2>(),
                                                        other.footprint_radius));
      }
      if (worst < best_overlap) {
        best_overlap = worst;
        best.pose = pose;
        best.footprint_radius = radius;
      }
      if (worst <= params.max_overlap_fraction) break;
    }
    best.best_effort = best_overlap > params.max_overlap_fraction;
    best.pose.instance_id = static_cast<std::uint32_t>(n + 1);
    scene.instances.push_back(best);
  }
  return scene;
}

Scene compose_scene(const std::vector<ShellMesh>& meshes, const SceneParams& params,
                    const Camera& camera, std::uint64_t seed) {
  std::vector<std::shared_ptr<const ShellMesh>> shared;
  shared.reserve(meshes.size());
  for (const auto& m : meshes) shared.push_back(std::make_shared<const ShellMesh>(m));
  return compose_scene(std::move(shared), params, camera, seed);
}

namespace {

std::string g17(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return {buf, res.ptr};
}

}  // namespace

void write_poses(const Scene& scene, std::ostream& out) {
  out << "# id mesh tx ty tz qw qx qy qz scale radius best_effort\n";
  for (const SceneInstance& inst : scene.instances) {
    const auto& p = inst.pose;
    out << p.instance_id << ' ' << inst.mesh_index << ' ' << g17(p.translation.x()) << ' '
        << g17(p.translation.y()) << ' ' << g17(p.translation.z()) << ' ' << g17(p.rotation.w())
        << ' ' << g17(p.rotation.x()) << ' ' << g17(p.rotation.y()) << ' ' << g17(p.rotation.z())
        << ' ' << g17(p.uniform_scale) << ' ' << g17(inst.footprint_radius) << ' '
        << (inst.best_effort ? 1 : 0) << '\n';
  }
}

}  // namespace shellgen
