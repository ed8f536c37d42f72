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

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "shellgen/raster.hpp"

namespace shellgen {

/// Foreground / background grid, row-major.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<bool> bits;

  [[nodiscard]] bool at(int x, int y) const {
    return bits[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)];
  }
  [[nodiscard]] std::size_t count() const;
};

[[nodiscard]] BinaryMask binarize(const MaskImage& mask);

/// |a & b| / |a | b|, 1.0 when both are empty. Throws std::invalid_argument on
/// a dimension mismatch.
[[nodiscard]] double iou(const BinaryMask& a, const BinaryMask& b);

/// Pixel count per nonzero label.
[[nodiscard]] std::map<std::uint32_t, std::size_t> instance_pixel_counts(const MaskImage& mask);

/// Fraction of pixels with a nonzero label.
[[nodiscard]] double foreground_fraction(const MaskImage& mask);

/// IoU aggregated over a set of (prediction, truth) pairs.
struct IouSummary {
  double micro = 1.0;  // pooled intersection over pooled union
  double mean = 1.0;   // average of per-pair IoU
};

[[nodiscard]] IouSummary iou_summary(std::span<const BinaryMask> predictions,
                                     std::span<const BinaryMask> truths);

}  // namespace shellgen
