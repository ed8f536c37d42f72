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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "shellgen/shell_model.hpp"

namespace shellgen {

using Triangle = std::array<std::uint32_t, 3>;

/// Indexed triangle mesh. Counterclockwise winding faces outward.
struct ShellMesh {
  std::vector<Point3> vertices;
  std::vector<Triangle> triangles;
  std::vector<Eigen::Vector3d> normals;
  std::vector<Eigen::Vector2d> uvs;

  [[nodiscard]] bool empty() const noexcept { return vertices.empty() || triangles.empty(); }
  bool operator==(const ShellMesh&) const = default;
};

struct MeshReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t face_count = 0;
  std::size_t bad_index_count = 0;
  std::size_t degenerate_count = 0;
  std::size_t boundary_edge_count = 0;     // edges with one incident triangle
  std::size_t nonmanifold_edge_count = 0;  // edges with three or more
  std::size_t inconsistent_edge_count = 0; // shared edges traversed the same way twice

  [[nodiscard]] long long euler_characteristic() const noexcept {
    return static_cast<long long>(vertex_count) - static_cast<long long>(edge_count) +
           static_cast<long long>(face_count);
  }
  [[nodiscard]] bool closed() const noexcept { return boundary_edge_count == 0; }
  [[nodiscard]] bool manifold() const noexcept { return nonmanifold_edge_count == 0; }
  [[nodiscard]] bool winding_consistent() const noexcept { return inconsistent_edge_count == 0; }
  [[nodiscard]] bool valid() const noexcept {
    return bad_index_count == 0 && degenerate_count == 0 && closed() && manifold() &&
           winding_consistent() && euler_characteristic() == 2;
  }
  [[nodiscard]] std::string describe() const;
};

/// Triangles with area below this are counted as degenerate.
inline constexpr double kDegenerateArea = 1e-12;

/// Structural checks; never modifies the mesh.
[[nodiscard]] MeshReport validate_mesh(const ShellMesh& mesh);

/// Joins consecutive rings index by index with two triangles per quad and caps
/// the lowest and highest ring with centroid fans. Vertex order: ring points
/// layer by layer, then the bottom cap centre, then the top cap centre.
/// Requires >= 2 rings of equal size (>= 3 points) with strictly increasing z.
[[nodiscard]] ShellMesh stitch_rings(const std::vector<LayerRing>& rings);

/// Area-weighted vertex normals from the current triangles.
void compute_vertex_normals(ShellMesh& mesh);

/// Divergence-theorem volume; throws std::invalid_argument for an open mesh.
[[nodiscard]] double signed_volume(const ShellMesh& mesh);

/// Wavefront OBJ: v / vt / vn / f a/a/a lines, 9 significant digits, '\n' endings.
void export_obj(const ShellMesh& mesh, std::ostream& out);
[[nodiscard]] std::string export_obj(const ShellMesh& mesh);
/// Throws std::ios_base::failure on I/O errors.
void write_obj(const ShellMesh& mesh, const std::filesystem::path& path);

/// Reads the subset of OBJ produced by export_obj (polygons are fan-triangulated).
/// Throws std::runtime_error on malformed input.
[[nodiscard]] ShellMesh read_obj(std::istream& in);
[[nodiscard]] ShellMesh read_obj(const std::filesystem::path& path);

/// 9 significant digits, '.' separator, independent of the global locale.
[[nodiscard]] std::string format_g9(double value);

}  // namespace shellgen
