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
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "shellgen/rng.hpp"
#include "shellgen/spline.hpp"

namespace shellgen {

using Point3 = Eigen::Vector3d;

/// Raised when a layer cannot be built (e.g. every ring point coincides).
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generator parameters. Noise means and deviations are given in the same
/// numbers the ablation tables use; they are divided by `noise_scale` before
/// being applied in model units.
struct ShellParams {
  double mu1 = 150.0;     // control-point noise mean
  double mu2 = 150.0;     // knot noise mean
  double sigma1 = 150.0;  // control-point noise std dev
  double sigma2 = 15.0;   // knot noise std dev
  int alpha_min = 15;     // layer count is drawn uniformly from [alpha_min, alpha_max]
  int alpha_max = 20;
  double r = 0.97;  // in-growth rate, layer alpha is scaled by r^alpha
  double d = 6.0;   // depth per layer, z = alpha * d
  double noise_scale = 10.0;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;

  bool operator==(const ShellParams&) const = default;
};

/// One stratified layer: a closed ring at z = alpha * d, counterclockwise seen
/// from +z, without a repeated closing point.
struct LayerRing {
  int alpha = 0;
  std::vector<Point3> points;

  bool operator==(const LayerRing&) const = default;
};

/// Perimeter as two cubic half-curves sharing both end control points. The
/// top half runs from the right tip over +y to the left tip; the bottom half
/// runs between the same tips over -y.
struct BaseOutline {
  SplineCurve top;
  SplineCurve bottom;

  bool operator==(const BaseOutline&) const = default;
};

/// Fixed teardrop outline: 7 control points per half, clamped cubic knots over
/// [0, 1000], control polygon spanning [0, 1000] x [0, 600].
[[nodiscard]] BaseOutline canonical_base_outline();

/// Control polygon of the outline: top forward then bottom backward, without
/// repeating the shared tips.
[[nodiscard]] std::vector<Point2> outline_control_polygon(const BaseOutline& outline);

/// True if no two non-adjacent edges of the closed polygon intersect.
[[nodiscard]] bool polygon_is_simple(const std::vector<Point2>& polygon);

/// Shoelace area, positive for counterclockwise order.
[[nodiscard]] double polygon_area(const std::vector<Point2>& polygon);

/// Adds N(mu1, sigma1^2)/noise_scale to each control coordinate and
/// N(mu2, sigma2^2)/noise_scale to each interior knot, then sorts the knots and
/// restores the clamped ends.
[[nodiscard]] SplineCurve perturb_curve(const SplineCurve& base, Rng& rng,
                                        const ShellParams& params);

/// Perturbs both halves; the shared tips are drawn once and reused by the bottom half.
[[nodiscard]] BaseOutline perturb_outline(const BaseOutline& base, Rng& rng,
                                          const ShellParams& params);

/// Perturbed, sampled and in-grown ring for layer `alpha`; 2*samples_per_half - 2 points.
[[nodiscard]] LayerRing build_layer(const BaseOutline& outline, int alpha,
                                    std::size_t samples_per_half, Rng& rng,
                                    const ShellParams& params);

/// Rings alpha = 1..L with L drawn uniformly from [alpha_min, alpha_max].
///
/// Streams: the layer count comes from Rng::child(seed, "layer-count"), and
/// layer alpha perturbs with Rng::child(seed, "layer", alpha), so a layer's
/// shape does not depend on how many layers are drawn.
[[nodiscard]] std::vector<LayerRing> generate_shell(const ShellParams& params,
                                                    std::size_t samples_per_half);

/// Same, on an explicit outline.
[[nodiscard]] std::vector<LayerRing> generate_shell(const BaseOutline& outline,
                                                    const ShellParams& params,
                                                    std::size_t samples_per_half);

/// Vertex mean of the ring points.
[[nodiscard]] Point3 ring_centroid(const LayerRing& ring);

/// Std dev of the points' distances to the ring centroid divided by their mean.
[[nodiscard]] double ring_roughness(const LayerRing& ring);

}  // namespace shellgen
