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
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace shellgen {

using Point2 = Eigen::Vector2d;

/// Non-decreasing parameter breakpoints t_0..t_m.
class KnotVector {
 public:
  KnotVector() = default;
  explicit KnotVector(std::vector<double> knots) : knots_(std::move(knots)) {}

  /// k+1 copies of `lo`, evenly spaced interior knots, k+1 copies of `hi`,
  /// for n+1 control points: n + k + 2 knots in total.
  [[nodiscard]] static KnotVector clamped_uniform(std::size_t control_count, int degree,
                                                  double lo, double hi);

  [[nodiscard]] std::size_t size() const noexcept { return knots_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const { return knots_[i]; }
  [[nodiscard]] std::span<const double> values() const noexcept { return knots_; }
  [[nodiscard]] std::vector<double>& mutable_values() noexcept { return knots_; }

  bool operator==(const KnotVector&) const = default;

 private:
  std::vector<double> knots_;
};

struct KnotReport {
  bool monotone = true;
  bool count_matches = true;
  std::size_t expected_count = 0;
  std::size_t actual_count = 0;
  /// First index i where t_i > t_{i+1}; only meaningful when !monotone.
  std::size_t first_descent = 0;

  [[nodiscard]] bool valid() const noexcept { return monotone && count_matches; }
  [[nodiscard]] std::string describe() const;
};

/// Checks monotonicity and the count relation m = n + k + 1 (m + 1 knots).
[[nodiscard]] KnotReport validate_knots(const KnotVector& knots, std::size_t n, int degree);

/// Degree-k B-spline over 2D control points c_0..c_n.
struct SplineCurve {
  std::vector<Point2> control_points;
  KnotVector knots;
  int degree = 3;

  /// Cubic curve with clamped uniform knots over [lo, hi].
  [[nodiscard]] static SplineCurve clamped(std::vector<Point2> control_points, double lo,
                                           double hi, int degree = 3);

  /// Evaluation domain [t_k, t_{m-k}].
  [[nodiscard]] double domain_begin() const { return knots[static_cast<std::size_t>(degree)]; }
  [[nodiscard]] double domain_end() const {
    return knots[knots.size() - 1 - static_cast<std::size_t>(degree)];
  }

  /// Throws std::invalid_argument if the degree, control count or knots are inconsistent.
  void check() const;

  bool operator==(const SplineCurve&) const = default;
};

/// B_{i,k}(t) by the Cox-de Boor recursion. Terms with a zero denominator
/// contribute 0. Spans are half-open [t_j, t_{j+1}) except the last non-empty
/// span of the domain [t_k, t_{m-k}], which is closed. Any finite t is accepted
/// and evaluates to 0 away from the support; throws std::domain_error for an
/// out-of-range index or a non-finite t.
[[nodiscard]] double basis(std::size_t i, int degree, double t, const KnotVector& knots);

/// S(t) = sum_i c_i B_{i,k}(t). Throws std::domain_error outside [t_k, t_{m-k}].
[[nodiscard]] Point2 eval_curve(const SplineCurve& curve, double t);

/// Same curve by de Boor's algorithm.
[[nodiscard]] Point2 eval_curve_deboor(const SplineCurve& curve, double t);

/// `count` points at uniformly spaced parameters over the domain, both ends included.
[[nodiscard]] std::vector<Point2> sample_curve(const SplineCurve& curve, std::size_t count);

/// Index j of the span [t_j, t_{j+1}) containing t, restricted to the domain.
[[nodiscard]] std::size_t find_span(const KnotVector& knots, int degree, double t);

}  // namespace shellgen
