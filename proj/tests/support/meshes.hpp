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

#include "shellgen/mesh.hpp"

namespace shellgen::testmesh {

/// Unit cube [0,1]^3 with outward counterclockwise winding.
inline ShellMesh unit_cube() {
  ShellMesh m;
  for (int i = 0; i < 8; ++i) m.vertices.emplace_back(i & 1, (i >> 1) & 1, (i >> 2) & 1);
  m.triangles = {{0, 2, 1}, {1, 2, 3},   // z = 0
                 {4, 5, 6}, {5, 7, 6},   // z = 1
                 {0, 1, 4}, {1, 5, 4},   // y = 0
                 {2, 6, 3}, {3, 6, 7},   // y = 1
                 {0, 4, 2}, {2, 4, 6},   // x = 0
                 {1, 3, 5}, {3, 7, 5}};  // x = 1
  compute_vertex_normals(m);
  m.uvs.assign(m.vertices.size(), Eigen::Vector2d::Zero());
  return m;
}

inline ShellMesh single_triangle() {
  ShellMesh m;
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  m.triangles = {{0, 1, 2}};
  compute_vertex_normals(m);
  m.uvs = {{0, 0}, {1, 0}, {0, 1}};
  return m;
}

}  // namespace shellgen::testmesh
