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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "shellgen/shell_model.hpp"
#include "shellgen/spline.hpp"

using namespace shellgen;

namespace {

ShellParams zero_noise() {
  ShellParams p;
  p.mu1 = p.mu2 = p.sigma1 = p.sigma2 = 0.0;
  return p;
}

// Ring of the unperturbed outline before in-growth.
std::vector<Point2> base_ring(std::size_t samples_per_half) {
  const BaseOutline o = canonical_base_outline();
  std::vector<Point2> ring = sample_curve(o.top, samples_per_half);
  const auto bottom = sample_curve(o.bottom, samples_per_half);
  for (std::size_t i = samples_per_half - 2; i >= 1; --i) ring.push_back(bottom[i]);
  return ring;
}

LayerRing ring_from(const std::vector<Point2>& pts) {
  LayerRing ring;
  ring.alpha = 1;
  for (const auto& p : pts) ring.points.emplace_back(p.x(), p.y(), 0.0);
  return ring;
}

}  // namespace

TEST(CanonicalOutline, DeterministicAndWellFormed) {
  const BaseOutline a = canonical_base_outline();
  EXPECT_EQ(a, canonical_base_outline());
  ASSERT_EQ(a.top.control_points.size(), 7u);
  ASSERT_EQ(a.bottom.control_points.size(), 7u);
  EXPECT_EQ(a.top.degree, 3);
  EXPECT_EQ(a.top.control_points.front(), a.bottom.control_points.front());
  EXPECT_EQ(a.top.control_points.back(), a.bottom.control_points.back());
  EXPECT_EQ(a.top.domain_begin(), 0.0);
  EXPECT_EQ(a.top.domain_end(), 1000.0);

  double x0 = 1e9, x1 = -1e9, y0 = 1e9, y1 = -1e9;
  for (const auto* c : {&a.top, &a.bottom}) {
    for (const auto& p : c->control_points) {
      x0 = std::min(x0, p.x()); x1 = std::max(x1, p.x());
      y0 = std::min(y0, p.y()); y1 = std::max(y1, p.y());
    }
  }
  EXPECT_EQ(x1 - x0, 1000.0);
  EXPECT_EQ(y1 - y0, 600.0);
}

TEST(CanonicalOutline, ControlPolygonIsSimple) {
  EXPECT_TRUE(polygon_is_simple(outline_control_polygon(canonical_base_outline())));
  EXPECT_FALSE(polygon_is_simple({{0, 0}, {1, 1}, {1, 0}, {0, 1}}));  // bow tie
}

TEST(CanonicalOutline, EnclosedAreaInRange) {
  const double area = polygon_area(base_ring(1024));
  EXPECT_GT(area, 1e5);
  EXPECT_LT(area, 6e5);
}

TEST(PerturbCurve, ZeroNoiseIsIdentity) {
  const SplineCurve base = canonical_base_outline().top;
  Rng rng(1);
  EXPECT_EQ(perturb_curve(base, rng, zero_noise()), base);
}

TEST(PerturbCurve, DeterministicMeanShift) {
  ShellParams p = zero_noise();
  p.mu1 = 150.0;
  p.noise_scale = 10.0;
  const BaseOutline base = canonical_base_outline();
  Rng rng(1);
  const BaseOutline out = perturb_outline(base, rng, p);
  for (const auto* pair : {&base.top, &base.bottom}) {
    const SplineCurve& shifted = pair == &base.top ? out.top : out.bottom;
    for (std::size_t i = 0; i < pair->control_points.size(); ++i) {
      EXPECT_EQ(shifted.control_points[i].x(), pair->control_points[i].x() + 15.0);
      EXPECT_EQ(shifted.control_points[i].y(), pair->control_points[i].y() + 15.0);
    }
    EXPECT_EQ(shifted.knots, pair->knots);
  }
}

TEST(PerturbCurve, ControlNoiseStandardDeviation) {
  ShellParams p = zero_noise();
  p.sigma1 = 150.0;
  const SplineCurve base = canonical_base_outline().top;
  Rng rng(42);
  std::vector<double> deltas;
  while (deltas.size() < 10000) {
    const SplineCurve out = perturb_curve(base, rng, p);
    for (std::size_t i = 0; i < base.control_points.size() && deltas.size() < 10000; ++i) {
      deltas.push_back(out.control_points[i].x() - base.control_points[i].x());
      deltas.push_back(out.control_points[i].y() - base.control_points[i].y());
    }
  }
  double mean = 0.0;
  for (double d : deltas) mean += d;
  mean /= static_cast<double>(deltas.size());
  double var = 0.0;
  for (double d : deltas) var += (d - mean) * (d - mean);
  const double sd = std::sqrt(var / static_cast<double>(deltas.size() - 1));
  EXPECT_NEAR(sd, 15.0, 0.03 * 15.0);
}

TEST(PerturbCurve, KnotsStayValidForAnyNoise) {
  const SplineCurve base = canonical_base_outline().bottom;
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    ShellParams p;
    p.mu2 = rng.uniform(-20000, 20000);
    p.sigma2 = rng.uniform(0, 20000);
    p.noise_scale = rng.uniform(0.1, 20);
    const SplineCurve out = perturb_curve(base, rng, p);
    ASSERT_TRUE(validate_knots(out.knots, out.control_points.size() - 1, out.degree).valid());
    EXPECT_EQ(out.domain_begin(), 0.0);
    EXPECT_EQ(out.domain_end(), 1000.0);
    // End interpolation survives: the curve still starts and ends on its end control points.
    EXPECT_EQ(eval_curve(out, 0.0), out.control_points.front());
    EXPECT_EQ(eval_curve(out, 1000.0), out.control_points.back());
  }
}

TEST(PerturbOutline, SharedTipsSurvive) {
  Rng rng(3);
  const BaseOutline out = perturb_outline(canonical_base_outline(), rng, ShellParams{});
  EXPECT_EQ(out.top.control_points.front(), out.bottom.control_points.front());
  EXPECT_EQ(out.top.control_points.back(), out.bottom.control_points.back());
  EXPECT_NE(out.top.control_points.front(), canonical_base_outline().top.control_points.front());
}

TEST(BuildLayer, NoGrowthReproducesBaseRing) {
  ShellParams p = zero_noise();
  p.r = 1.0;
  Rng rng(0);
  const auto expected = base_ring(32);
  for (int alpha : {1, 4, 17}) {
    const LayerRing ring = build_layer(canonical_base_outline(), alpha, 32, rng, p);
    ASSERT_EQ(ring.points.size(), expected.size());
    EXPECT_EQ(ring.alpha, alpha);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_NEAR(ring.points[i].x(), expected[i].x(), 1e-9);
      EXPECT_NEAR(ring.points[i].y(), expected[i].y(), 1e-9);
      EXPECT_EQ(ring.points[i].z(), alpha * p.d);
    }
  }
}

TEST(BuildLayer, GrowthScalesAboutCentroid) {
  ShellParams p = zero_noise();
  p.r = 0.9;
  Rng rng(0);
  const auto base = base_ring(32);
  const LayerRing base_layer = ring_from(base);
  const Point3 c0 = ring_centroid(base_layer);
  const LayerRing ring = build_layer(canonical_base_outline(), 2, 32, rng, p);
  const Point3 c = ring_centroid(ring);
  for (std::size_t i = 0; i < base.size(); ++i) {
    const double base_dist = (base_layer.points[i] - c0).head<2>().norm();
    const double dist = (ring.points[i] - c).head<2>().norm();
    EXPECT_NEAR(dist, 0.81 * base_dist, 1e-9);
  }
}

TEST(BuildLayer, CounterclockwiseWithoutRepeatedPoints) {
  Rng rng(5);
  const LayerRing ring = build_layer(canonical_base_outline(), 3, 16, rng, ShellParams{});
  EXPECT_EQ(ring.points.size(), 30u);
  std::vector<Point2> flat;
  for (const auto& p : ring.points) flat.emplace_back(p.x(), p.y());
  EXPECT_GT(polygon_area(flat), 0.0);
  EXPECT_NE(ring.points.front(), ring.points.back());
}

TEST(BuildLayer, Preconditions) {
  Rng rng(0);
  EXPECT_THROW((void)build_layer(canonical_base_outline(), 0, 16, rng, ShellParams{}), std::invalid_argument);
  EXPECT_THROW((void)build_layer(canonical_base_outline(), 1, 7, rng, ShellParams{}), std::invalid_argument);
  BaseOutline point;
  point.top = SplineCurve::clamped(std::vector<Point2>(4, Point2(5, 5)), 0.0, 1.0);
  point.bottom = point.top;
  EXPECT_THROW((void)build_layer(point, 1, 16, rng, zero_noise()), GenerationError);
}

TEST(GenerateShell, LayerCountIsUniform) {
  ShellParams p;
  std::vector<int> hist(6, 0);
  const int n = 10000;
  for (int s = 0; s < n; ++s) {
    p.seed = static_cast<std::uint64_t>(s);
    const auto rings = generate_shell(p, 8);
    ASSERT_GE(rings.size(), 15u);
    ASSERT_LE(rings.size(), 20u);
    ++hist[rings.size() - 15];
  }
  for (int h : hist) EXPECT_NEAR(static_cast<double>(h) / n, 1.0 / 6.0, 0.02);
}

TEST(GenerateShell, DeterministicWithDepthLaw) {
  ShellParams p;
  p.seed = 0;
  const auto a = generate_shell(p, 32);
  EXPECT_EQ(a, generate_shell(p, 32));
  ASSERT_GE(a.size(), 15u);
  ASSERT_LE(a.size(), 20u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].alpha, static_cast<int>(i) + 1);
    for (const auto& pt : a[i].points) ASSERT_EQ(pt.z(), a[i].alpha * p.d);
    if (i > 0) EXPECT_GT(a[i].points[0].z(), a[i - 1].points[0].z());
  }
}

TEST(GenerateShell, RejectsInvalidParams) {
  ShellParams p;
  p.r = 0.0;
  EXPECT_THROW((void)generate_shell(p, 16), std::invalid_argument);
  p = ShellParams{};
  p.alpha_min = 0;
  EXPECT_THROW((void)generate_shell(p, 16), std::invalid_argument);
  p = ShellParams{};
  p.sigma1 = -1;
  try {
    (void)generate_shell(p, 16);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("sigma1"), std::string::npos);
  }
}

TEST(RingRoughness, CircleIsSmooth) {
  std::vector<Point2> circle;
  for (int i = 0; i < 360; ++i) {
    const double a = 2 * std::numbers::pi * i / 360;
    circle.emplace_back(7 + 250 * std::cos(a), -3 + 250 * std::sin(a));
  }
  EXPECT_NEAR(ring_roughness(ring_from(circle)), 0.0, 1e-9);
}

TEST(RingRoughness, EllipseMatchesQuadrature) {
  const double a = 2.0, b = 1.0;
  // Oracle: mean and variance of rho(theta) = sqrt(a^2 cos^2 + b^2 sin^2) by
  // composite Simpson over [0, 2 pi] with 4096 intervals.
  const int n = 4096;
  auto rho = [&](double t) { return std::sqrt(a * a * std::cos(t) * std::cos(t) + b * b * std::sin(t) * std::sin(t)); };
  double m1 = 0.0, m2 = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = 2 * std::numbers::pi * i / n;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    m1 += w * rho(t);
    m2 += w * rho(t) * rho(t);
  }
  m1 *= (2 * std::numbers::pi / n) / 3.0 / (2 * std::numbers::pi);
  m2 *= (2 * std::numbers::pi / n) / 3.0 / (2 * std::numbers::pi);
  const double expected = std::sqrt(m2 - m1 * m1) / m1;

  std::vector<Point2> ellipse;
  for (int i = 0; i < 1024; ++i) {
    const double t = 2 * std::numbers::pi * i / 1024;
    ellipse.emplace_back(a * std::cos(t), b * std::sin(t));
  }
  EXPECT_GT(expected, 0.0);
  EXPECT_NEAR(ring_roughness(ring_from(ellipse)), expected, 1e-9);
}

TEST(RingRoughness, TooFewPoints) {
  EXPECT_THROW((void)ring_roughness(ring_from({{0, 0}, {1, 0}, {1, 1}})), std::invalid_argument);
}

TEST(RingRoughness, GrowsWithControlNoise) {
  auto mean_roughness = [](double sigma1) {
    ShellParams p;
    p.sigma1 = sigma1;
    double sum = 0.0;
    int count = 0;
    for (int s = 0; s < 100; ++s) {
      p.seed = static_cast<std::uint64_t>(s);
      for (const auto& ring : generate_shell(p, 32)) {
        sum += ring_roughness(ring);
        ++count;
      }
    }
    return sum / count;
  };
  EXPECT_GT(mean_roughness(250.0), mean_roughness(50.0));
}
