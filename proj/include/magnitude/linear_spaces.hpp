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
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "magnitude/magnitude.hpp"
#include "magnitude/metric_space.hpp"

namespace magnitude {

/// Consecutive gaps (d_1, ..., d_{n-1}) of n collinear points; the empty
/// tuple is a single point.
class GapTuple {
 public:
  GapTuple() = default;

  explicit GapTuple(std::vector<double> gaps) : gaps_(std::move(gaps)) {
    for (double g : gaps_)
      if (!(g > 0.0) || !std::isfinite(g))
        throw std::invalid_argument("GapTuple: gaps must be strictly positive");
  }

  const std::vector<double>& gaps() const { return gaps_; }
  std::size_t point_count() const { return gaps_.size() + 1; }

 private:
  std::vector<double> gaps_;
};

/// dist(i,j) = sum of the gaps between points i and j.
inline FiniteMetricSpace as_space(const GapTuple& g) {
  const std::size_t n = g.point_count();
  std::vector<double> pos(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) pos[i] = pos[i - 1] + g.gaps()[i - 1];
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      d(i, j) = pos[j] - pos[i];
      d(j, i) = d(i, j);
    }
  return FiniteMetricSpace(std::move(d));
}

/// Closed-form weights: interior point i gets (tanh(d_{i-1}/2)+tanh(d_i/2))/2;
/// the missing gap at each end is infinite, contributing tanh = 1.
inline Weighting linear_weights(const GapTuple& g) {
  const std::size_t n = g.point_count();
  std::vector<double> w(n);
  if (n == 1) {
    w[0] = 1.0;
    return {std::move(w)};
  }
  const auto& d = g.gaps();
  w[0] = 0.5 * (1.0 + std::tanh(d.front() / 2.0));
  w[n - 1] = 0.5 * (1.0 + std::tanh(d.back() / 2.0));
  for (std::size_t i = 1; i + 1 < n; ++i)
    w[i] = 0.5 * (std::tanh(d[i - 1] / 2.0) + std::tanh(d[i] / 2.0));
  return {std::move(w)};
}

/// |X_d| = 1 + sum_i tanh(d_i / 2).
inline double linear_magnitude(const GapTuple& g) {
  double s = 0.0;
  for (double d : g.gaps()) s += std::tanh(d / 2.0);
  return 1.0 + s;
}

/// Magnitude of the closed segment of length l: l/2 + 1.  l = 0 is the
/// degenerate single point.
inline double segment_magnitude(double length) {
  if (!(length >= 0.0))
    throw std::invalid_argument("segment_magnitude: length must be nonnegative");
  return length / 2.0 + 1.0;
}

enum class GapScheme { uniform, random, geometric };

/// A family of n-point subdivisions of a length-l segment.  The uniform and
/// random schemes satisfy the convergence hypotheses (gap sum l, max gap to
/// zero); the geometric scheme (fixed ratio 0.9) deliberately does not.
struct SegmentApproximation {
  double length = 1.0;
  GapScheme scheme = GapScheme::uniform;
  int points = 2;
  unsigned seed = 42;
};

inline GapTuple segment_gaps(const SegmentApproximation& approx) {
  if (!(approx.length > 0.0))
    throw std::invalid_argument("segment_gaps: length must be positive");
  if (approx.points < 2)
    throw std::invalid_argument("segment_gaps: need at least two points");
  const std::size_t m = static_cast<std::size_t>(approx.points) - 1;
  std::vector<double> gaps(m);
  switch (approx.scheme) {
    case GapScheme::uniform: {
      const double g = approx.length / static_cast<double>(m);
      std::fill(gaps.begin(), gaps.end(), g);
      break;
    }
    case GapScheme::random: {
      // Uniform simplex proportions via normalized exponentials.
      std::mt19937 rng(approx.seed);
      std::exponential_distribution<double> exp1(1.0);
      double total = 0.0;
      for (double& g : gaps) {
        do {
          g = exp1(rng);
        } while (g <= 0.0);
        total += g;
      }
      for (double& g : gaps) g *= approx.length / total;
      break;
    }
    case GapScheme::geometric: {
      const double ratio = 0.9;
      double total = 0.0, w = 1.0;
      for (double& g : gaps) {
        g = w;
        total += w;
        w *= ratio;
      }
      for (double& g : gaps) g *= approx.length / total;
      break;
    }
  }
  return GapTuple(std::move(gaps));
}

struct SegmentConvergenceEntry {
  int points = 0;
  double value = 0.0;
  double error = 0.0;  // against l/2 + 1
};

/// Tabulates |X^n| and its error against the segment limit for each n.
inline std::vector<SegmentConvergenceEntry> segment_convergence(
    SegmentApproximation approx, std::span<const int> n_list) {
  std::vector<SegmentConvergenceEntry> out;
  out.reserve(n_list.size());
  const double limit = segment_magnitude(approx.length);
  for (int n : n_list) {
    approx.points = n;
    const double value = linear_magnitude(segment_gaps(approx));
    out.push_back({n, value, std::abs(value - limit)});
  }
  return out;
}

}  // namespace magnitude
