/* Copyright 2026 The magnitude authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "magnitude/errors.hpp"
#include "magnitude/matrix.hpp"

namespace magnitude {

/// A finite metric space: labelled points and a dense symmetric matrix of
/// pairwise distances.  Construction only enforces shape; axioms are checked
/// by validate(), which reports every violation instead of throwing.
class FiniteMetricSpace {
 public:
  FiniteMetricSpace() = default;

  explicit FiniteMetricSpace(Matrix distances, std::vector<std::string> labels = {})
      : dist_(std::move(distances)), labels_(std::move(labels)) {
    if (!dist_.square())
      throw DimensionMismatch("FiniteMetricSpace: distance matrix must be square");
    if (labels_.empty()) {
      labels_.reserve(dist_.rows());
      for (std::size_t i = 0; i < dist_.rows(); ++i) labels_.push_back(std::to_string(i));
    } else if (labels_.size() != dist_.rows()) {
      throw DimensionMismatch("FiniteMetricSpace: labels do not match matrix size");
    }
  }

  std::size_t size() const { return dist_.rows(); }
  double distance(std::size_t i, std::size_t j) const { return dist_(i, j); }
  const Matrix& distances() const { return dist_; }
  const std::vector<std::string>& labels() const { return labels_; }

  double min_offdiagonal() const {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j) m = std::min(m, dist_(i, j));
    return m;
  }

  double max_distance() const {
    double m = 0.0;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j) m = std::max(m, dist_(i, j));
    return m;
  }

 private:
  Matrix dist_;
  std::vector<std::string> labels_;
};

enum class ViolationKind { asymmetry, nonzero_diagonal, zero_offdiagonal, triangle };

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> indices;
  double magnitude;  // size of the breach, e.g. triangle excess
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Relative slack for the triangle check: tau = factor * (max distance).
inline constexpr double kTriangleSlackFactor = 1e-9;

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::asymmetry: return "asymmetry";
    case ViolationKind::nonzero_diagonal: return "nonzero-diagonal";
    case ViolationKind::zero_offdiagonal: return "zero-offdiagonal";
    case ViolationKind::triangle: return "triangle";
  }
  return "?";
}

/// Checks all metric axioms and reports each violation found.
inline ValidationReport validate(const FiniteMetricSpace& space) {
  ValidationReport report;
  const std::size_t n = space.size();
  const Matrix& d = space.distances();

  for (std::size_t i = 0; i < n; ++i)
    if (d(i, i) != 0.0)
      report.violations.push_back(
          {ViolationKind::nonzero_diagonal, {i}, std::abs(d(i, i))});

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d(i, j) != d(j, i))
        report.violations.push_back(
            {ViolationKind::asymmetry, {i, j}, std::abs(d(i, j) - d(j, i))});
      if (!(d(i, j) > 0.0))
        report.violations.push_back(
            {ViolationKind::zero_offdiagonal, {i, j}, std::abs(d(i, j))});
    }

  const double tau = kTriangleSlackFactor * space.max_distance();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        const double excess = d(i, k) - d(i, j) - d(j, k);
        if (excess > tau)
          report.violations.push_back({ViolationKind::triangle, {i, j, k}, excess});
      }

  report.ok = report.violations.empty();
  return report;
}

/// Builds the Euclidean subspace metric on a point cloud.
inline FiniteMetricSpace from_points(const std::vector<std::vector<double>>& coords) {
  const std::size_t n = coords.size();
  const std::size_t m = n == 0 ? 0 : coords.front().size();
  if (n > 0 && m == 0)
    throw DimensionMismatch("from_points: points must have dimension >= 1");
  for (const auto& p : coords)
    if (p.size() != m) throw DimensionMismatch("from_points: mixed dimensions");

  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < m; ++c) {
        const double t = coords[i][c] - coords[j][c];
        s += t * t;
      }
      const double dist = std::sqrt(s);
      if (dist == 0.0)
        throw DuplicatePoint("from_points: points " + std::to_string(i) + " and " +
                             std::to_string(j) + " coincide");
      d(i, j) = dist;
      d(j, i) = dist;
    }
  return FiniteMetricSpace(std::move(d));
}

/// Scales every distance by t > 0, keeping labels.
inline FiniteMetricSpace scale(const FiniteMetricSpace& space, double t) {
  if (!(t > 0.0)) throw NonpositiveScale("scale: factor must be positive");
  const std::size_t n = space.size();
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(i, j) = t * space.distance(i, j);
  return FiniteMetricSpace(std::move(d), space.labels());
}

}  // namespace magnitude
