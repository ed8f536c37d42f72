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

#include "shellgen/mesh.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <Eigen/Geometry>

namespace shellgen {

std::string MeshReport::describe() const {
  std::ostringstream out;
  out << "V=" << vertex_count << " E=" << edge_count << " F=" << face_count
      << " euler=" << euler_characteristic() << " closed=" << (closed() ? "yes" : "no")
      << " boundary_edges=" << boundary_edge_count << " manifold=" << (manifold() ? "yes" : "no")
      << " nonmanifold_edges=" << nonmanifold_edge_count
      << " winding=" << (winding_consistent() ? "consistent" : "inconsistent")
      << " inconsistent_edges=" << inconsistent_edge_count << " degenerate=" << degenerate_count
      << " bad_indices=" << bad_index_count;
  return out.str();
}

namespace {

Eigen::Vector3d face_cross(const ShellMesh& mesh, const Triangle& tri) {
  const Point3& a = mesh.vertices[tri[0]];
  return (mesh.vertices[tri[1]] - a).cross(mesh.vertices[tri[2]] - a);
}

struct EdgeUse {
  std::uint32_t forward = 0;   // traversed as (min, max)
  std::uint32_t backward = 0;  // traversed as (max, min)
};

std::map<std::pair<std::uint32_t, std::uint32_t>, EdgeUse> collect_edges(const ShellMesh& mesh) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, EdgeUse> edges;
  const auto vcount = mesh.vertices.size();
  for (const Triangle& tri : mesh.triangles) {
    if (tri[0] >= vcount || tri[1] >= vcount || tri[2] >= vcount) continue;
    for (int e = 0; e < 3; ++e) {
      const std::uint32_t a = tri[e];
      const std::uint32_t b = tri[(e + 1) % 3];
      auto& use = edges[{std::min(a, b), std::max(a, b)}];
      (a < b ? use.forward : use.backward) += 1;
    }
  }
  return edges;
}

}  // namespace

MeshReport validate_mesh(const ShellMesh& mesh) {
  MeshReport report;
  report.vertex_count = mesh.vertices.size();
  report.face_count = mesh.triangles.size();
  for (const Triangle& tri : mesh.triangles) {
    if (tri[0] >= report.vertex_count || tri[1] >= report.vertex_count ||
        tri[2] >= report.vertex_count) {
      ++report.bad_index_count;
      continue;
    }
    if (0.5 * face_cross(mesh, tri).norm() < kDegenerateArea) ++report.degenerate_count;
  }
  const auto edges = collect_edges(mesh);
  report.edge_count = edges.size();
  for (const auto& [key, use] : edges) {
    const std::uint32_t total = use.forward + use.backward;
    if (total == 1) ++report.boundary_edge_count;
    if (total > 2) ++report.nonmanifold_edge_count;
    if (total == 2 && use.forward != 1) ++report.inconsistent_edge_count;
  }
  return report;
}

void compute_vertex_normals(ShellMesh& mesh) {
  mesh.normals.assign(mesh.vertices.size(), Eigen::Vector3d::Zero());
  for (const Triangle& tri : mesh.triangles) {
    // Unnormalized cross product: twice the area times the unit normal.
    const Eigen::Vector3d n = face_cross(mesh, tri);
    for (std::uint32_t v : tri) mesh.normals[v] += n;
  }
  for (auto& n : mesh.normals) {
    const double len = n.norm();
    n = len > 0.0 ? Eigen::Vector3d(n / len) : Eigen::Vector3d::UnitZ();
  }
}

ShellMesh stitch_rings(const std::vector<LayerRing>& rings) {
  if (rings.size() < 2) throw std::invalid_argument("stitch_rings needs at least 2 rings");
  const std::size_t P = rings.front().points.size();
  if (P < 3) throw std::invalid_argument("rings need at least 3 points");
  for (std::size_t a = 0; a < rings.size(); ++a) {
    if (rings[a].points.size() != P) throw std::invalid_argument("ring point counts differ");
    const double z = rings[a].points.front().z();
    for (const Point3& p : rings[a].points) {
      if (p.z() != z) throw std::invalid_argument("ring points do not share one z");
    }
    if (a > 0 && !(z > rings[a - 1].points.front().z())) {
      throw std::invalid_argument("ring z values must strictly increase");
    }
  }

  const std::size_t L = rings.size();
  ShellMesh mesh;
  mesh.vertices.reserve(L * P + 2);
  mesh.uvs.reserve(L * P + 2);
  for (std::size_t a = 0; a < L; ++a) {
    const double v = static_cast<double>(a) / static_cast<double>(L - 1);
    for (std::size_t j = 0; j < P; ++j) {
      mesh.vertices.push_back(rings[a].points[j]);
      mesh.uvs.emplace_back(static_cast<double>(j) / static_cast<double>(P), v);
    }
  }
  const auto bottom_center = static_cast<std::uint32_t>(mesh.vertices.size());
  mesh.vertices.push_back(ring_centroid(rings.front()));
  mesh.uvs.emplace_back(0.5, 0.0);
  const auto top_center = static_cast<std::uint32_t>(mesh.vertices.size());
  mesh.vertices.push_back(ring_centroid(rings.back()));
  mesh.uvs.emplace_back(0.5, 1.0);

  auto idx = [P](std::size_t layer, std::size_t j) {
    return static_cast<std::uint32_t>(layer * P + j % P);
  };
  mesh.triangles.reserve(2 * P * (L - 1) + 2 * P);
  for (std::size_t a = 0; a + 1 < L; ++a) {
    for (std::size_t j = 0; j < P; ++j) {
      const std::uint32_t p0 = idx(a, j), p1 = idx(a, j + 1);
      const std::uint32_t q0 = idx(a + 1, j), q1 = idx(a + 1, j + 1);
      mesh.triangles.push_back({p0, p1, q1});
      mesh.triangles.push_back({p0, q1, q0});
    }
  }
  for (std::size_t j = 0; j < P; ++j) {
    mesh.triangles.push_back({bottom_center, idx(0, j + 1), idx(0, j)});
    mesh.triangles.push_back({top_center, idx(L - 1, j), idx(L - 1, j + 1)});
  }
  compute_vertex_normals(mesh);
  return mesh;
}

double signed_volume(const ShellMesh& mesh) {
  const MeshReport report = validate_mesh(mesh);
  if (report.bad_index_count > 0) throw std::invalid_argument("mesh has out-of-range indices");
  if (mesh.triangles.empty() || !report.closed()) {
    throw std::invalid_argument("signed_volume needs a closed mesh");
  }
  double six_volume = 0.0;
  for (const Triangle& tri : mesh.triangles) {
    six_volume += mesh.vertices[tri[0]].dot(mesh.vertices[tri[1]].cross(mesh.vertices[tri[2]]));
  }
  return six_volume / 6.0;
}

std::string format_g9(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
  std::string text(buf, res.ptr);
  if (text == "-0") text = "0";
  return text;
}

void export_obj(const ShellMesh& mesh, std::ostream& out) {
  std::string text;
  text.reserve(mesh.vertices.size() * 96 + mesh.triangles.size() * 32);
  for (const Point3& v : mesh.vertices) {
    text += "v " + format_g9(v.x()) + ' ' + format_g9(v.y()) + ' ' + format_g9(v.z()) + '\n';
  }
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    const Eigen::Vector2d uv = i < mesh.uvs.size() ? mesh.uvs[i] : Eigen::Vector2d::Zero();
    text += "vt " + format_g9(uv.x()) + ' ' + format_g9(uv.y()) + '\n';
  }
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    const Eigen::Vector3d n = i < mesh.normals.size() ? mesh.normals[i] : Eigen::Vector3d::UnitZ();
    text += "vn " + format_g9(n.x()) + ' ' + format_g9(n.y()) + ' ' + format_g9(n.z()) + '\n';
  }
  for (const Triangle& tri : mesh.triangles) {
    text += 'f';
    for (std::uint32_t v : tri) {
      const std::string i = std::to_string(v + 1);
      text += ' ' + i + '/' + i + '/' + i;
    }
    text += '\n';
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::string export_obj(const ShellMesh& mesh) {
  std::ostringstream out;
  export_obj(mesh, out);
  return std::move(out).str();
}

void write_obj(const ShellMesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path.string() + " for writing");
  export_obj(mesh, out);
  out.flush();
  if (!out) throw std::ios_base::failure("failed writing " + path.string());
}

namespace {

double parse_double(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
    throw std::runtime_error("OBJ line " + std::to_string(line) + ": bad number '" +
                             std::string(token) + "'");
  }
  return value;
}

}  // namespace

ShellMesh read_obj(std::istream& in) {
  ShellMesh mesh;
  std::vector<Eigen::Vector2d> uvs;
  std::vector<Eigen::Vector3d> normals;
  std::vector<std::uint32_t> uv_of_vertex;
  std::vector<std::uint32_t> normal_of_vertex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tag;
    if (!(tokens >> tag) || tag[0] == '#') continue;
    std::vector<std::string> fields;
    for (std::string f; tokens >> f;) fields.push_back(f);
    auto need = [&](std::size_t n) {
      if (fields.size() < n) {
        throw std::runtime_error("OBJ line " + std::to_string(line_no) + ": too few fields");
      }
    };
    if (tag == "v") {
      need(3);
      mesh.vertices.emplace_back(parse_double(fields[0], line_no), parse_double(fields[1], line_no),
                                 parse_double(fields[2], line_no));
    } else if (tag == "vt") {
      need(2);
      uvs.emplace_back(parse_double(fields[0], line_no), parse_double(fields[1], line_no));
    } else if (tag == "vn") {
      need(3);
      normals.emplace_back(parse_double(fields[0], line_no), parse_double(fields[1], line_no),
                           parse_double(fields[2], line_no));
    } else if (tag == "f") {
      need(3);
      std::vector<std::uint32_t> poly;
      for (const std::string& f : fields) {
        // v, v/vt, v//vn or v/vt/vn; only positive indices.
        std::array<long, 3> parts = {0, 0, 0};
        std::size_t part = 0;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= f.size(); ++i) {
          if (i == f.size() || f[i] == '/') {
            if (part > 2) throw std::runtime_error("OBJ line " + std::to_string(line_no) + ": bad face");
            if (i > start) parts[part] = std::stol(f.substr(start, i - start));
            ++part;
            start = i + 1;
          }
        }
        if (parts[0] < 1 || static_cast<std::size_t>(parts[0]) > mesh.vertices.size()) {
          throw std::runtime_error("OBJ line " + std::to_string(line_no) + ": face index out of range");
        }
        const auto v = static_cast<std::uint32_t>(parts[0] - 1);
        if (uv_of_vertex.size() < mesh.vertices.size()) uv_of_vertex.resize(mesh.vertices.size(), 0);
        if (normal_of_vertex.size() < mesh.vertices.size()) normal_of_vertex.resize(mesh.vertices.size(), 0);
        if (parts[1] > 0) uv_of_vertex[v] = static_cast<std::uint32_t>(parts[1]);
        if (parts[2] > 0) normal_of_vertex[v] = static_cast<std::uint32_t>(parts[2]);
        poly.push_back(v);
      }
      for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
        mesh.triangles.push_back({poly[0], poly[i], poly[i + 1]});
      }
    }
  }
  uv_of_vertex.resize(mesh.vertices.size(), 0);
  normal_of_vertex.resize(mesh.vertices.size(), 0);
  if (!uvs.empty()) {
    mesh.uvs.resize(mesh.vertices.size(), Eigen::Vector2d::Zero());
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
      if (uv_of_vertex[i] > 0 && uv_of_vertex[i] <= uvs.size()) mesh.uvs[i] = uvs[uv_of_vertex[i] - 1];
    }
  }
  if (!normals.empty()) {
    mesh.normals.resize(mesh.vertices.size(), Eigen::Vector3d::UnitZ());
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
      if (normal_of_vertex[i] > 0 && normal_of_vertex[i] <= normals.size()) {
        mesh.normals[i] = normals[normal_of_vertex[i] - 1];
      }
    }
  }
  return mesh;
}

ShellMesh read_obj(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  return read_obj(in);
}

}  // namespace shellgen
