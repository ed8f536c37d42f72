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
#include <filesystem>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "shellgen/camera.hpp"
#include "shellgen/scene.hpp"

namespace shellgen {

/// Instance labels (0 = background) plus camera-frame depth, row-major.
/// Background pixels above the horizon have depth +infinity.
struct MaskImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint32_t> labels;
  std::vector<double> depth;

  [[nodiscard]] std::uint32_t label(int x, int y) const {
    return labels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)];
  }
};

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;
};

/// Projected vertices are snapped to 1/kSubpixelScale pixel (std::llround)
/// before coverage is decided, and coverage is evaluated exactly at pixel
/// centres (x + 0.5, y + 0.5) with integer edge functions and the top-left rule.
inline constexpr std::int64_t kSubpixelScale = 256;

/// Triangles with a vertex whose snapped coordinate exceeds this are dropped.
inline constexpr std::int64_t kMaxSnappedCoordinate = std::int64_t{1} << 40;

/// Z-buffered rasterization of every instance over the ground plane. Triangles
/// crossing the near plane are dropped. A fragment wins if its depth is smaller;
/// exact ties go to the lower instance id (the ground counts as id 0), then to
/// the lower triangle index. Output does not depend on `workers`.
[[nodiscard]] MaskImage rasterize(const Scene& scene, const Camera& camera, int workers = 1);

/// Lambertian flat shading with the same visibility as rasterize():
/// round(255 * max(0, n . l)) with n the outward face normal. Ground pixels use
/// a quarter of that intensity with n = +z; pixels with no surface are 0.
[[nodiscard]] GrayImage shade_preview(const Scene& scene, const Camera& camera,
                                      const Eigen::Vector3d& light_direction, int workers = 1);

/// Camera-frame depth of the ground plane through a pixel centre, or +infinity.
[[nodiscard]] double ground_depth(const Camera& camera, double ground_z, int x, int y);

/// Binary PGM (P5), 16-bit big-endian samples: "P5\n<w> <h>\n65535\n" + payload.
/// Throws std::invalid_argument for labels above 65535, std::ios_base::failure on I/O errors.
void write_mask_pgm(const MaskImage& mask, std::ostream& out);
void write_mask_pgm(const MaskImage& mask, const std::filesystem::path& path);

/// Binary PGM (P5), 8-bit samples: "P5\n<w> <h>\n255\n" + payload.
void write_gray_pgm(const GrayImage& image, std::ostream& out);
void write_gray_pgm(const GrayImage& image, const std::filesystem::path& path);

/// Any binary PGM with maxval <= 65535.
struct PgmImage {
  int width = 0;
  int height = 0;
  int maxval = 0;
  std::vector<std::uint16_t> samples;
};

/// Throws std::runtime_error on malformed input.
[[nodiscard]] PgmImage read_pgm(std::istream& in);
[[nodiscard]] PgmImage read_pgm(const std::filesystem::path& path);

/// Labels of a 16-bit mask PGM; depth is filled with +infinity.
[[nodiscard]] MaskImage mask_from_pgm(const PgmImage& pgm);

}  // namespace shellgen
