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

#include "shellgen/shell_model.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace shellgen {

void ShellParams::validate() const {
  auto fail = [](const char* field, const char* why) {
    throw std::invalid_argument(std::string(field) + ": " + why);
  };
  if (!(sigma1 >= 0.0)) fail("sigma1", "must be >= 0");
  if (!(sigma2 >= 0.0)) fail("sigma2", "must be >= 0");
  if (!std::isfinite(mu1)) fail("mu1", "must be finite");
  if (!std::isfinite(mu2)) fail("mu2", "must be finite");
  if (!(r > 0.0 && r <= 1.0)) fail("r", "must be in (0, 1]");
  if (!(d > 0.0) || !std::isfinite(d)) fail("d", "must be > 0");
  if (!(noise_scale > 0.0) || !std::isfinite(noise_scale)) fail("noise_scale", "must be > 0");
  if (alpha_min < 1) fail("alpha_min", "must be >= 1");
  if (alpha_max < alpha_min) fail("alpha_max", "must be >= alpha_min");
}

BaseOutline canonical_base_outline() {
  // Teardrop: rounded right end, narrower hinge towards the left.
  std::vector<Point2> top = {{1000, 300}, {1000, 520}, {780, 600}, {500, 590},
                             {250, 520},  {60, 420},   {0, 300}};
  std::vector<Point2> bottom = {{1000, 300}, {1000, 80}, {780, 0},  {500, 10},
                                {250, 80},   {60, 180},  {0, 300}};
  return {SplineCurve::clamped(std::move(top), 0.0, 1000.0),
          SplineCurve::clamped(std::move(bottom), 0.0, 1000.0)};
}

std::vector<Point2> outline_control_polygon(const BaseOutline& outline) {
  std::vector<Point2> poly(outline.top.control_points);
  const auto& bottom = outline.bottom.control_points;
  for (std::size_t i = bottom.size() - 2; i >= 1; --i) poly.push_back(bottom[i]);
  return poly;
}

namespace {

double orient(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
  return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
         std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  const double o1 = orient(a, b, c), o2 = orient(a, b, d);
  const double o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0))) {
    return true;
  }
  return (o1 == 0 && on_segment(a, b, c)) || (o2 == 0 && on_segment(a, b, d)) ||
         (o3 == 0 && on_segment(c, d, a)) || (o4 == 0 && on_segment(c, d, b));
}

}  // namespace

bool polygon_is_simple(const std::vector<Point2>& polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Skip adjacent edges, which share a vertex.
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_intersect(polygon[i], polygon[(i + 1) % n], polygon[j], polygon[(j + 1) % n])) {
        return false;
      }
    }
  }
  return true;
}

double polygon_area(const std::vector<Point2>& polygon) {
  double twice = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point2& a = polygon[i];
    const Point2& b = polygon[(i + 1) % polygon.size()];
    twice += a.x() * b.y() - b.x() * a.y();
  }
  return 0.5 * twice;
}

namespace {

Point2 noisy_point(const Point2& p, Rng& rng, const ShellParams& params) {
  const double dx = rng.gaussian(params.mu1, params.sigma1) / params.noise_scale;
  const double dy = rng.gaussian(params.mu1, params.sigma1) / params.noise_scale;
  return {p.x() + dx, p.y() + dy};
}

// Pins, when given, replace the first/last control points and consume no draws.
SplineCurve perturb_impl(const SplineCurve& base, Rng& rng, const ShellParams& params,
                         const std::optional<Point2>& first, const std::optional<Point2>& last) {
  base.check();
  SplineCurve out = base;
  const std::size_t count = out.control_points.size();
  for (std::size_t i = 0; i < count; ++i) {
    if (i == 0 && first) {
      out.control_points[i] = *first;
    } else if (i + 1 == count && last) {
      out.control_points[i] = *last;
    } else {
      out.control_points[i] = noisy_point(base.control_points[i], rng, params);
    }
  }

  const auto k = static_cast<std::size_t>(base.degree);
  auto& t = out.knots.mutable_values();
  const std::size_t m = t.size() - 1;
  const double lo = t[k];
  const double hi = t[m - k];
  for (std::size_t i = k + 1; i + k < m; ++i) {
    t[i] += rng.gaussian(params.mu2, params.sigma2) / params.noise_scale;
  }
  std::sort(t.begin() + static_cast<std::ptrdiff_t>(k + 1),
            t.begin() + static_cast<std::ptrdiff_t>(m - k));
  // Interior knots stay strictly inside the domain so end multiplicities are
  // exactly k+1 and the curve still interpolates its end control points.
  const double margin = (hi - lo) * 1e-6;
  for (std::size_t i = k + 1; i + k < m; ++i) {
    t[i] = std::clamp(t[i], lo + margin, hi - margin);
  }
  for (std::size_t i = 0; i <= k; ++i) {
    t[i] = lo;
    t[m - i] = hi;
  }
  return out;
}

}  // namespace

SplineCurve perturb_curve(const SplineCurve& base, Rng& rng, const ShellParams& params) {
  return perturb_impl(base, rng, params, std::nullopt, std::nullopt);
}

BaseOutline perturb_outline(const BaseOutline& base, Rng& rng, const ShellParams& params) {
  BaseOutline out;
  out.top = perturb_curve(base.top, rng, params);
  out.bottom = perturb_impl(base.bottom, rng, params, out.top.control_points.front(),
                            out.top.control_points.back());
  return out;
}

Point3 ring_centroid(const LayerRing& ring) {
  Point3 sum = Point3::Zero();
  for (const Point3& p : ring.points) sum += p;
  return ring.points.empty() ? sum : Point3(sum / static_cast<double>(ring.points.size()));
}

LayerRing build_layer(const BaseOutline& outline, int alpha, std::size_t samples_per_half,
                      Rng& rng, const ShellParams& params) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  if (samples_per_half < 8) throw std::invalid_argument("samples_per_half must be >= 8");
  const BaseOutline layer = perturb_outline(outline, rng, params);
  const std::vector<Point2> top = sample_curve(layer.top, samples_per_half);
  const std::vector<Point2> bottom = sample_curve(layer.bottom, samples_per_half);

  std::vector<Point2> raw(top);
  raw.reserve(2 * samples_per_half - 2);
  for (std::size_t i = samples_per_half - 2; i >= 1; --i) raw.push_back(bottom[i]);

  Point2 centroid = Point2::Zero();
  for (const Point2& p : raw) centroid += p;
  centroid /= static_cast<double>(raw.size());

  double spread = 0.0;
  for (const Point2& p : raw) spread = std::max(spread, (p - centroid).norm());
  if (!(spread > 1e-12 * std::max(1.0, centroid.norm()))) {
    throw GenerationError("degenerate layer ring: all points coincide");
  }

  const double shrink = std::pow(params.r, alpha);
  const double z = static_cast<double>(alpha) * params.d;
  LayerRing ring;
  ring.alpha = alpha;
  ring.points.reserve(raw.size());
  for (const Point2& p : raw) {
    const Point2 q = centroid + (p - centroid) * shrink;
    ring.points.emplace_back(q.x(), q.y(), z);
  }
  return ring;
}

std::vector<LayerRing> generate_shell(const BaseOutline& outline, const ShellParams& params,
                                      std::size_t samples_per_half) {
  params.validate();
  Rng count_rng = Rng::child(params.seed, "layer-count");
  const auto layers = static_cast<int>(count_rng.uniform_int(params.alpha_min, params.alpha_max));
  std::vector<LayerRing> rings;
  rings.reserve(static_cast<std::size_t>(layers));
  for (int alpha = 1; alpha <= layers; ++alpha) {
    Rng layer_rng = Rng::child(params.seed, "layer", static_cast<std::uint64_t>(alpha));
    rings.push_back(build_layer(outline, alpha, samples_per_half, layer_rng, params));
  }
  return rings;
}

std::vector<LayerRing> generate_shell(const ShellParams& params, std::size_t samples_per_half) {
  return generate_shell(canonical_base_outline(), params, samples_per_half);
}

double ring_roughness(const LayerRing& ring) {
  if (ring.points.size() < 8) throw std::invalid_argument("ring_roughness needs >= 8 points");
  const Point3 c = ring_centroid(ring);
  std::vector<double> dist;
  dist.reserve(ring.points.size());
  for (const Point3& p : ring.points) dist.push_back((p - c).head<2>().norm());
  const auto n = static_cast<double>(dist.size());
  double mean = 0.0;
  for (double v : dist) mean += v;
  mean /= n;
  if (mean == 0.0) return 0.0;
  double variance = 0.0;
  for (double v : dist) variance += (v - mean) * (v - mean);
  variance /= n;
  return std::sqrt(variance) / mean;
}

}  // namespace shellgen
