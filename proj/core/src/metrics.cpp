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

#include "shellgen/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace shellgen {

std::size_t BinaryMask::count() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), true));
}

BinaryMask binarize(const MaskImage& mask) {
  BinaryMask out;
  out.width = mask.width;
  out.height = mask.height;
  out.bits.resize(mask.labels.size());
  for (std::size_t i = 0; i < mask.labels.size(); ++i) out.bits[i] = mask.labels[i] > 0;
  return out;
}

namespace {

struct Counts {
  std::size_t intersection = 0;
  std::size_t uni = 0;
};

Counts overlap(const BinaryMask& a, const BinaryMask& b) {
  if (a.width != b.width || a.height != b.height || a.bits.size() != b.bits.size()) {
    throw std::invalid_argument("iou: mask dimensions differ");
  }
  Counts c;
  for (std::size_t i = 0; i < a.bits.size(); ++i) {
    c.intersection += a.bits[i] && b.bits[i];
    c.uni += a.bits[i] || b.bits[i];
  }
  return c;
}

double ratio(const Counts& c) {
  return c.uni == 0 ? 1.0 : static_cast<double>(c.intersection) / static_cast<double>(c.uni);
}

}  // namespace

double iou(const BinaryMask& a, const BinaryMask& b) { return ratio(overlap(a, b)); }

std::map<std::uint32_t, std::size_t> instance_pixel_counts(const MaskImage& mask) {
  std::map<std::uint32_t, std::size_t> counts;
  for (std::uint32_t label : mask.labels) {
    if (label > 0) ++counts[label];
  }
  return counts;
}

double foreground_fraction(const MaskImage& mask) {
  if (mask.labels.empty()) return 0.0;
  const auto fg = std::count_if(mask.labels.begin(), mask.labels.end(),
                                [](std::uint32_t l) { return l > 0; });
  return static_cast<double>(fg) / static_cast<double>(mask.labels.size());
}

IouSummary iou_summary(std::span<const BinaryMask> predictions, std::span<const BinaryMask> truths) {
  if (predictions.size() != truths.size()) {
    throw std::invalid_argument("iou_summary: prediction and truth counts differ");
  }
  IouSummary summary;
  if (predictions.empty()) return summary;
  Counts pooled;
  double sum = 0.0;
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    const Counts c = overlap(predictions[i], truths[i]);
    pooled.intersection += c.intersection;
    pooled.uni += c.uni;
    sum += ratio(c);
  }
  summary.micro = ratio(pooled);
  summary.mean = sum / static_cast<double>(predictions.size());
  return summary;
}

}  // namespace shellgen
