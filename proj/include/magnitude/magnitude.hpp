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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "magnitude/errors.hpp"
#include "magnitude/linear_solve.hpp"
#include "magnitude/metric_space.hpp"

namespace magnitude {

/// Per-point weights w with  sum_j exp(-d(i,j)) w_j = 1  for every i.
struct Weighting {
  std::vector<double> weights;
};

struct MagnitudeResult {
  double value = 0.0;
  Weighting weighting;
  SolveDiagnostics diagnostics;
};

/// Residual at which a computed weighting stops being trusted.
inline constexpr double kWeightingResidualLimit = 1e-9;

/// Absolute tolerance of the row-multiset homogeneity check.
inline constexpr double kHomogeneityTol = 1e-12;

/// Z with Z(i,j) = exp(-d(i,j)); unit diagonal, entries in (0,1].
inline Matrix exponentiated_matrix(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  Matrix z(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    z(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double e = std::exp(-space.distance(i, j));
      z(i, j) = e;
      z(j, i) = e;
    }
  }
  return z;
}

/// Weights and their sum, from one linear solve of Z w = 1.  Throws
/// MagnitudeUndefined when Z is numerically singular or the weighting
/// residual cannot be certified.
inline MagnitudeResult magnitude(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  if (n == 0) return {0.0, {}, {SolveMethod::cholesky, true, 1.0}};

  const Matrix z = exponentiated_matrix(space);
  const std::vector<double> ones(n, 1.0);
  SymmetricSolve solve;
  try {
    solve = solve_symmetric(z, ones);
  } catch (const SingularMatrix& e) {
    throw MagnitudeUndefined(std::string("magnitude: ") + e.what());
  }

  std::vector<double> residual = matvec(z, solve.solution);
  double worst = 0.0;
  for (double r : residual) worst = std::max(worst, std::abs(r - 1.0));
  if (worst > kWeightingResidualLimit)
    throw MagnitudeUndefined("magnitude: weighting residual above tolerance");

  const double value =
      std::accumulate(solve.solution.begin(), solve.solution.end(), 0.0);
  return {value, Weighting{std::move(solve.solution)}, solve.diagnostics};
}

inline Weighting weighting(const FiniteMetricSpace& space) {
  return magnitude(space).weighting;
}

/// True when every row of the distance matrix is a permutation of every other
/// (the checkable surrogate for a transitive isometry action).
inline bool is_homogeneous(const FiniteMetricSpace& space, double tol = kHomogeneityTol) {
  const std::size_t n = space.size();
  if (n <= 1) return true;
  std::vector<double> ref(n), row(n);
  for (std::size_t j = 0; j < n; ++j) ref[j] = space.distance(0, j);
  std::sort(ref.begin(), ref.end());
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row[j] = space.distance(i, j);
    std::sort(row.begin(), row.end());
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(row[j] - ref[j]) > tol) return false;
  }
  return true;
}

/// Fast path for homogeneous spaces:  |X| = n / sum_j exp(-d(x0, j)).
inline double magnitude_homogeneous(const FiniteMetricSpace& space) {
  if (!is_homogeneous(space))
    throw NotHomogeneous("magnitude_homogeneous: rows are not a common multiset");
  const std::size_t n = space.size();
  if (n == 0) return 0.0;
  double denom = 0.0;
  for (std::size_t j = 0; j < n; ++j) denom += std::exp(-space.distance(0, j));
  return static_cast<double>(n) / denom;
}

/// True when n <= 1 or every pairwise distance exceeds ln(n-1), which forces
/// the exponentiated matrix to be positive definite.
inline bool is_sufficiently_separated(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  if (n <= 1) return true;
  return space.min_offdiagonal() > std::log(static_cast<double>(n - 1));
}

struct MagnitudePoint {
  double t = 0.0;
  std::optional<double> value;  // empty marks an undefined magnitude
};

/// The magnitude function t -> |tX| on a grid.  Undefined points are marked,
/// never aborting the sweep.
inline std::vector<MagnitudePoint> magnitude_function(const FiniteMetricSpace& space,
                                                      std::span<const double> t_grid) {
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0))
      throw std::invalid_argument("magnitude_function: grid must be positive");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
      throw std::invalid_argument("magnitude_function: grid must be strictly increasing");
  }
  std::vector<MagnitudePoint> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    MagnitudePoint p;
    p.t = t;
    try {
      p.value = magnitude(scale(space, t)).value;
    } catch (const MagnitudeUndefined&) {
      p.value = std::nullopt;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace magnitude
