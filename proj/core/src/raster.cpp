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

#include "shellgen/raster.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

namespace shellgen {

namespace {

__extension__ using Wide = __int128;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint32_t kNoTriangle = std::numeric_limits<std::uint32_t>::max();

struct ScreenTriangle {
  std::array<std::int64_t, 3> x{};
  std::array<std::int64_t, 3> y{};
  std::array<double, 3> depth{};
  Wide area2 = 0;  // positive after orientation fix-up
  std::uint32_t instance_id = 0;
  int px0 = 0, px1 = -1, py0 = 0, py1 = -1;  // inclusive pixel bounds
  Eigen::Vector3d normal = Eigen::Vector3d::UnitZ();
};

struct Fragment {
  double depth = kInf;
  std::uint32_t instance_id = 0;
  std::uint32_t triangle = kNoTriangle;
};

// Triangles are stored in submission order, so their index is the last tie-break.
bool wins(double depth, std::uint32_t instance_id, std::uint32_t triangle, const Fragment& current) {
  if (depth != current.depth) return depth < current.depth;
  if (instance_id != current.instance_id) return instance_id < current.instance_id;
  return triangle < current.triangle;
}

Wide orient(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by, std::int64_t px,
            std::int64_t py) {
  return static_cast<Wide>(bx - ax) * static_cast<Wide>(py - ay) -
         static_cast<Wide>(by - ay) * static_cast<Wide>(px - ax);
}

// For area2 > 0 in y-down coordinates the interior lies where all edge
// functions are positive. Top edge: horizontal with dx > 0. Left edge: dy < 0.
bool top_left(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) {
  const std::int64_t dx = bx - ax;
  const std::int64_t dy = by - ay;
  return dy < 0 || (dy == 0 && dx > 0);
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

std::vector<ScreenTriangle> setup_triangles(const Scene& scene, const Camera& camera) {
  std::vector<ScreenTriangle> out;
  const std::int64_t half = kSubpixelScale / 2;
  for (const SceneInstance& inst : scene.instances) {
    const ShellMesh& mesh = scene.mesh_of(inst);
    std::vector<Eigen::Vector3d> world(mesh.vertices.size());
    for (std::size_t i = 0; i < world.size(); ++i) world[i] = inst.pose.apply(mesh.vertices[i]);
    for (const Triangle& tri : mesh.triangles) {
      ScreenTriangle st;
      bool keep = true;
      for (int c = 0; c < 3 && keep; ++c) {
        const auto proj = project(camera, world[tri[static_cast<std::size_t>(c)]]);
        if (!proj) {
          keep = false;
          break;
        }
        const double sx = proj->pixel.x() * static_cast<double>(kSubpixelScale);
        const double sy = proj->pixel.y() * static_cast<double>(kSubpixelScale);
        if (!(std::abs(sx) < static_cast<double>(kMaxSnappedCoordinate)) ||
            !(std::abs(sy) < static_cast<double>(kMaxSnappedCoordinate))) {
          keep = false;
          break;
        }
        st.x[static_cast<std::size_t>(c)] = std::llround(sx);
        st.y[static_cast<std::size_t>(c)] = std::llround(sy);
        st.depth[static_cast<std::size_t>(c)] = proj->depth;
      }
      if (!keep) continue;
      st.area2 = orient(st.x[0], st.y[0], st.x[1], st.y[1], st.x[2], st.y[2]);
      if (st.area2 == 0) continue;
      if (st.area2 < 0) {
        std::swap(st.x[1], st.x[2]);
        std::swap(st.y[1], st.y[2]);
        std::swap(st.depth[1], st.depth[2]);
        st.area2 = -st.area2;
      }
      const std::int64_t min_x = std::min({st.x[0], st.x[1], st.x[2]});
      const std::int64_t max_x = std::max({st.x[0], st.x[1], st.x[2]});
      const std::int64_t min_y = std::min({st.y[0], st.y[1], st.y[2]});
      const std::int64_t max_y = std::max({st.y[0], st.y[1], st.y[2]});
      // Pixel centre of column px sits at px * S + S/2.
      st.px0 = static_cast<int>(std::max<std::int64_t>(0, ceil_div(min_x - half, kSubpixelScale)));
      st.px1 = static_cast<int>(std::min<std::int64_t>(camera.width - 1, floor_div(max_x - half, kSubpixelScale)));
      st.py0 = static_cast<int>(std::max<std::int64_t>(0, ceil_div(min_y - half, kSubpixelScale)));
      st.py1 = static_cast<int>(std::min<std::int64_t>(camera.height - 1, floor_div(max_y - half, kSubpixelScale)));
      if (st.px0 > st.px1 || st.py0 > st.py1) continue;
      const Eigen::Vector3d n = (world[tri[1]] - world[tri[0]]).cross(world[tri[2]] - world[tri[0]]);
      const double len = n.norm();
      st.normal = len > 0.0 ? Eigen::Vector3d(n / len) : Eigen::Vector3d::UnitZ();
      st.instance_id = inst.pose.instance_id;
      out.push_back(st);
    }
  }
  return out;
}

void raster_rows(const std::vector<ScreenTriangle>& tris, const Camera& camera, double ground_z,
                 int row_begin, int row_end, std::vector<Fragment>& frags) {
  const std::int64_t S = kSubpixelScale;
  const auto W = static_cast<std::size_t>(camera.width);
  for (int y = row_begin; y < row_end; ++y) {
    for (int x = 0; x < camera.width; ++x) {
      frags[static_cast<std::size_t>(y) * W + static_cast<std::size_t>(x)].depth =
          ground_depth(camera, ground_z, x, y);
    }
  }
  for (std::uint32_t t = 0; t < tris.size(); ++t) {
    const ScreenTriangle& st = tris[t];
    const int y0 = std::max(st.py0, row_begin);
    const int y1 = std::min(st.py1, row_end - 1);
    if (y0 > y1) continue;
    const bool tl0 = top_left(st.x[1], st.y[1], st.x[2], st.y[2]);
    const bool tl1 = top_left(st.x[2], st.y[2], st.x[0], st.y[0]);
    const bool tl2 = top_left(st.x[0], st.y[0], st.x[1], st.y[1]);
    const double area = static_cast<double>(st.area2);
    for (int y = y0; y <= y1; ++y) {
      const std::int64_t cy = static_cast<std::int64_t>(y) * S + S / 2;
      for (int x = st.px0; x <= st.px1; ++x) {
        const std::int64_t cx = static_cast<std::int64_t>(x) * S + S / 2;
        const Wide w0 = orient(st.x[1], st.y[1], st.x[2], st.y[2], cx, cy);
        const Wide w1 = orient(st.x[2], st.y[2], st.x[0], st.y[0], cx, cy);
        const Wide w2 = orient(st.x[0], st.y[0], st.x[1], st.y[1], cx, cy);
        if (w0 < 0 || w1 < 0 || w2 < 0) continue;
        if ((w0 == 0 && !tl0) || (w1 == 0 && !tl1) || (w2 == 0 && !tl2)) continue;
        // Perspective-correct: 1/depth is affine in screen space.
        const double l0 = static_cast<double>(w0) / area;
        const double l1 = static_cast<double>(w1) / area;
        const double l2 = static_cast<double>(w2) / area;
        const double depth = 1.0 / (l0 / st.depth[0] + l1 / st.depth[1] + l2 / st.depth[2]);
        Fragment& f = frags[static_cast<std::size_t>(y) * W + static_cast<std::size_t>(x)];
        if (wins(depth, st.instance_id, t, f)) f = {depth, st.instance_id, t};
      }
    }
  }
}

std::vector<Fragment> resolve(const Scene& scene, const Camera& camera,
                              const std::vector<ScreenTriangle>& tris, int workers) {
  camera.validate();
  std::vector<Fragment> frags(static_cast<std::size_t>(camera.width) *
                              static_cast<std::size_t>(camera.height));
  workers = std::clamp(workers, 1, camera.height);
  if (workers == 1) {
    raster_rows(tris, camera, scene.ground_z, 0, camera.height, frags);
    return frags;
  }
  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      const int begin = camera.height * w / workers;
      const int end = camera.height * (w + 1) / workers;
      pool.emplace_back([&, begin, end] { raster_rows(tris, camera, scene.ground_z, begin, end, frags); });
    }
  }
  return frags;
}

}  // namespace

double ground_depth(const Camera& camera, double ground_z, int x, int y) {
  const Eigen::Vector3d ray_cam((x + 0.5 - camera.principal_point.x()) / camera.focal_length_px,
                                (y + 0.5 - camera.principal_point.y()) / camera.focal_length_px, 1.0);
  const Eigen::Vector3d ray = camera.orientation * ray_cam;
  if (ray.z() == 0.0) return kInf;
  // The camera-frame z component of ray_cam is 1, so the ray parameter is the depth.
  const double t = (ground_z - camera.position.z()) / ray.z();
  return t > kNearDepth ? t : kInf;
}

MaskImage rasterize(const Scene& scene, const Camera& camera, int workers) {
  const auto tris = setup_triangles(scene, camera);
  const auto frags = resolve(scene, camera, tris, workers);
  MaskImage mask;
  mask.width = camera.width;
  mask.height = camera.height;
  mask.labels.resize(frags.size());
  mask.depth.resize(frags.size());
  for (std::size_t i = 0; i < frags.size(); ++i) {
    mask.labels[i] = frags[i].instance_id;
    mask.depth[i] = frags[i].depth;
  }
  return mask;
}

GrayImage shade_preview(const Scene& scene, const Camera& camera,
                        const Eigen::Vector3d& light_direction, int workers) {
  const Eigen::Vector3d l = light_direction.normalized();
  const auto tris = setup_triangles(scene, camera);
  const auto frags = resolve(scene, camera, tris, workers);
  auto intensity = [](double cosine, double gain) {
    return static_cast<std::uint8_t>(std::lround(255.0 * gain * std::clamp(cosine, 0.0, 1.0)));
  };
  GrayImage img;
  img.width = camera.width;
  img.height = camera.height;
  img.pixels.resize(frags.size());
  for (std::size_t i = 0; i < frags.size(); ++i) {
    const Fragment& f = frags[i];
    if (f.triangle != kNoTriangle) {
      img.pixels[i] = intensity(tris[f.triangle].normal.dot(l), 1.0);
    } else if (std::isfinite(f.depth)) {
      img.pixels[i] = intensity(l.z(), 0.25);
    } else {
      img.pixels[i] = 0;
    }
  }
  return img;
}

void write_mask_pgm(const MaskImage& mask, std::ostream& out) {
  if (mask.labels.size() != static_cast<std::size_t>(mask.width) * static_cast<std::size_t>(mask.height)) {
    throw std::invalid_argument("mask label grid does not match its dimensions");
  }
  std::string bytes = "P5\n" + std::to_string(mask.width) + ' ' + std::to_string(mask.height) + "\n65535\n";
  bytes.reserve(bytes.size() + 2 * mask.labels.size());
  for (std::uint32_t label : mask.labels) {
    if (label > 65535) throw std::invalid_argument("mask label exceeds 65535");
    bytes.push_back(static_cast<char>(label >> 8));
    bytes.push_back(static_cast<char>(label & 0xff));
  }
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::ios_base::failure("failed writing mask PGM");
}

void write_gray_pgm(const GrayImage& image, std::ostream& out) {
  if (image.pixels.size() != static_cast<std::size_t>(image.width) * static_cast<std::size_t>(image.height)) {
    throw std::invalid_argument("image pixel grid does not match its dimensions");
  }
  const std::string header = "P5\n" + std::to_string(image.width) + ' ' + std::to_string(image.height) + "\n255\n";
  out.write(header.data(), static_cast<std::streamsize>(header.size()));
  out.write(reinterpret_cast<const char*>(image.pixels.data()),
            static_cast<std::streamsize>(image.pixels.size()));
  if (!out) throw std::ios_base::failure("failed writing PGM");
}

namespace {

template <typename Image, typename Writer>
void write_file(const Image& image, const std::filesystem::path& path, Writer writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path.string() + " for writing");
  writer(image, out);
  out.flush();
  if (!out) throw std::ios_base::failure("failed writing " + path.string());
}

int read_header_int(std::istream& in) {
  // Whitespace and '#' comments may precede each header field.
  for (;;) {
    const int c = in.peek();
    if (c == '#') {
      std::string skip;
      std::getline(in, skip);
    } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      in.get();
    } else {
      break;
    }
  }
  long value = -1;
  if (!(in >> value) || value < 0 || value > std::numeric_limits<int>::max()) {
    throw std::runtime_error("malformed PGM header");
  }
  return static_cast<int>(value);
}

}  // namespace

void write_mask_pgm(const MaskImage& mask, const std::filesystem::path& path) {
  write_file(mask, path, [](const MaskImage& m, std::ostream& o) { write_mask_pgm(m, o); });
}

void write_gray_pgm(const GrayImage& image, const std::filesystem::path& path) {
  write_file(image, path, [](const GrayImage& m, std::ostream& o) { write_gray_pgm(m, o); });
}

PgmImage read_pgm(std::istream& in) {
  char magic[2] = {0, 0};
  if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '5') {
    throw std::runtime_error("not a binary PGM (P5)");
  }
  PgmImage img;
  img.width = read_header_int(in);
  img.height = read_header_int(in);
  img.maxval = read_header_int(in);
  if (img.width <= 0 || img.height <= 0 || img.maxval <= 0 || img.maxval > 65535) {
    throw std::runtime_error("unsupported PGM dimensions or maxval");
  }
  if (!std::isspace(in.get())) throw std::runtime_error("malformed PGM header");
  const std::size_t count = static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height);
  const std::size_t bytes_per = img.maxval > 255 ? 2 : 1;
  std::string payload(count * bytes_per, '\0');
  if (!in.read(payload.data(), static_cast<std::streamsize>(payload.size()))) {
    throw std::runtime_error("truncated PGM payload");
  }
  img.samples.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (bytes_per == 2) {
      img.samples[i] = static_cast<std::uint16_t>((static_cast<unsigned char>(payload[2 * i]) << 8) |
                                                  static_cast<unsigned char>(payload[2 * i + 1]));
    } else {
      img.samples[i] = static_cast<unsigned char>(payload[i]);
    }
    if (img.samples[i] > img.maxval) throw std::runtime_error("PGM sample exceeds maxval");
  }
  return img;
}

PgmImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  return read_pgm(in);
}

MaskImage mask_from_pgm(const PgmImage& pgm) {
  MaskImage mask;
  mask.width = pgm.width;
  mask.height = pgm.height;
  mask.labels.assign(pgm.samples.begin(), pgm.samples.end());
  mask.depth.assign(pgm.samples.size(), kInf);
  return mask;
}

}  // namespace shellgen
