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

#include "shellgen/spline.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace shellgen {

KnotVector KnotVector::clamped_uniform(std::size_t control_count, int degree, double lo,
                                       double hi) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  const auto k = static_cast<std::size_t>(degree);
  if (control_count < k + 1) throw std::invalid_argument("need at least degree+1 control points");
  const std::size_t count = control_count + k + 1;
  const std::size_t interior = control_count - k - 1;
  std::vector<double> t(count);
  for (std::size_t i = 0; i <= k; ++i) {
    t[i] = lo;
    t[count - 1 - i] = hi;
  }
  for (std::size_t j = 1; j <= interior; ++j) {
    t[k + j] = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(interior + 1);
  }
  return KnotVector(std::move(t));
}

std::string KnotReport::describe() const {
  if (valid()) return "valid";
  std::ostringstream out;
  out << "invalid:";
  if (!monotone) out << " non-monotone at index " << first_descent << ';';
  if (!count_matches) {
    out << " m mismatch (needs length " << expected_count << ", got " << actual_count << ");";
  }
  return out.str();
}

KnotReport validate_knots(const KnotVector& knots, std::size_t n, int degree) {
  KnotReport report;
  report.actual_count = knots.size();
  // m = n + k + 1, and there are m + 1 knots.
  report.expected_count = degree < 0 ? 0 : n + static_cast<std::size_t>(degree) + 2;
  report.count_matches = degree >= 0 && report.actual_count == report.expected_count;
  const auto values = knots.values();
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i] > values[i + 1]) {
      report.monotone = false;
      report.first_descent = i;
      break;
    }
  }
  return report;
}

SplineCurve SplineCurve::clamped(std::vector<Point2> control_points, double lo, double hi,
                                 int degree) {
  SplineCurve curve;
  curve.knots = KnotVector::clamped_uniform(control_points.size(), degree, lo, hi);
  curve.control_points = std::move(control_points);
  curve.degree = degree;
  return curve;
}

void SplineCurve::check() const {
  if (degree < 1) throw std::invalid_argument("spline degree must be >= 1");
  if (control_points.size() < static_cast<std::size_t>(degree) + 1) {
    throw std::invalid_argument("spline needs at least degree+1 control points");
  }
  const KnotReport report = validate_knots(knots, control_points.size() - 1, degree);
  if (!report.valid()) throw std::invalid_argument("spline knots " + report.describe());
  if (!(domain_begin() < domain_end())) throw std::invalid_argument("spline domain is empty");
}

std::size_t find_span(const KnotVector& knots, int degree, double t) {
  const auto k = static_cast<std::size_t>(degree);
  const std::size_t last = knots.size() - 1 - k;  // index of the domain end knot
  const double lo = knots[k];
  const double hi = knots[last];
  if (!(t >= lo && t <= hi)) throw std::domain_error("parameter outside spline domain");
  if (t == hi) {
    // Closed last span: the last non-empty span ending at the domain end.
    std::size_t j = last - 1;
    while (j > k && knots[j] == hi) --j;
    return j;
  }
  const auto values = knots.values();
  // Largest j with t_j <= t, within [k, last - 1].
  const auto it = std::upper_bound(values.begin() + static_cast<std::ptrdiff_t>(k),
                                   values.begin() + static_cast<std::ptrdiff_t>(last), t);
  return static_cast<std::size_t>(it - values.begin()) - 1;
}

namespace {

constexpr std::size_t kNoSpan = static_cast<std::size_t>(-1);

double safe_ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

// Recursion with the degree-0 indicator resolved against a precomputed span.
double cox_de_boor(std::size_t i, int degree, double t, std::span<const double> t_knots,
                   std::size_t span) {
  if (degree == 0) return i == span ? 1.0 : 0.0;
  const auto k = static_cast<std::size_t>(degree);
  const double left = safe_ratio(t - t_knots[i], t_knots[i + k] - t_knots[i]);
  const double right = safe_ratio(t_knots[i + k + 1] - t, t_knots[i + k + 1] - t_knots[i + 1]);
  double value = 0.0;
  // A zero coefficient kills the term, so skip the recursion (keeps 0/0 := 0).
  if (left != 0.0) value += left * cox_de_boor(i, degree - 1, t, t_knots, span);
  if (right != 0.0) value += right * cox_de_boor(i + 1, degree - 1, t, t_knots, span);
  return value;
}

}  // namespace

double basis(std::size_t i, int degree, double t, const KnotVector& knots) {
  if (degree < 0) throw std::domain_error("negative degree");
  const auto k = static_cast<std::size_t>(degree);
  if (knots.size() < 2 * k + 2) throw std::domain_error("knot vector too short for degree");
  if (i > knots.size() - k - 2) throw std::domain_error("basis index out of range");
  if (!std::isfinite(t)) throw std::domain_error("non-finite spline parameter");
  const auto values = knots.values();
  const double lo = knots[k];
  const double hi = knots[knots.size() - 1 - k];
  std::size_t span = kNoSpan;
  if (t >= lo && t <= hi && lo < hi) {
    span = find_span(knots, degree, t);
  } else if (t >= values.front() && t < values.back()) {
    // Outside the domain but inside the knot range: plain half-open spans.
    const auto it = std::upper_bound(values.begin(), values.end(), t);
    span = static_cast<std::size_t>(it - values.begin()) - 1;
  }
  return cox_de_boor(i, degree, t, values, span);
}

Point2 eval_curve(const SplineCurve& curve, double t) {
  curve.check();
  const std::size_t span = find_span(curve.knots, curve.degree, t);
  const auto k = static_cast<std::size_t>(curve.degree);
  Point2 sum = Point2::Zero();
  // Only B_{span-k..span} can be nonzero on this span.
  for (std::size_t i = span - k; i <= span; ++i) {
    sum += curve.control_points[i] *
           cox_de_boor(i, curve.degree, t, curve.knots.values(), span);
  }
  return sum;
}

Point2 eval_curve_deboor(const SplineCurve& curve, double t) {
  curve.check();
  const auto k = static_cast<std::size_t>(curve.degree);
  const std::size_t span = find_span(curve.knots, curve.degree, t);
  const auto knots = curve.knots.values();
  std::vector<Point2> d(k + 1);
  for (std::size_t j = 0; j <= k; ++j) d[j] = curve.control_points[j + span - k];
  for (std::size_t r = 1; r <= k; ++r) {
    for (std::size_t j = k; j >= r; --j) {
      const std::size_t idx = j + span - k;
      const double den = knots[idx + 1 + k - r] - knots[idx];
      const double a = den == 0.0 ? 0.0 : (t - knots[idx]) / den;
      d[j] = (1.0 - a) * d[j - 1] + a * d[j];
    }
  }
  return d[k];
}

std::vector<Point2> sample_curve(const SplineCurve& curve, std::size_t count) {
  if (count < 2) throw std::invalid_argument("sample_curve needs count >= 2");
  curve.check();
  const double lo = curve.domain_begin();
  const double hi = curve.domain_end();
  std::vector<Point2> points;
  points.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double t = j + 1 == count
                         ? hi
                         : lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(count - 1);
    points.push_back(eval_curve(curve, t));
  }
  return points;
}

}  // namespace shellgen
