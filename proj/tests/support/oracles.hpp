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

// Test-side oracles.  Each one recomputes a quantity by a route that shares
// nothing with the library implementation it checks: brute-force inversion,
// interval enumeration, fixed long summation.

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "magnitude/matrix.hpp"

namespace oracles {

/// Gauss-Jordan inversion with partial pivoting.
inline magnitude::Matrix invert(magnitude::Matrix a) {
  const std::size_t n = a.rows();
  magnitude::Matrix inv = magnitude::Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(k, j));
        std::swap(inv(p, j), inv(k, j));
      }
    const double piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0.0) continue;
      const double f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

inline double sum_all_entries(const magnitude::Matrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j);
  return s;
}

/// Gap sequence of the level-k middle-thirds approximation, built by
/// enumerating interval endpoints (not by the library's recursion).
inline std::vector<double> cantor_gaps_by_enumeration(double length, int level) {
  std::vector<std::pair<double, double>> intervals = {{0.0, length}};
  for (int it = 0; it < level; ++it) {
    std::vector<std::pair<double, double>> next;
    next.reserve(intervals.size() * 2);
    for (const auto& [a, b] : intervals) {
      const double third = (b - a) / 3.0;
      next.emplace_back(a, a + third);
      next.emplace_back(b - third, b);
    }
    intervals = std::move(next);
  }
  std::vector<double> pts;
  pts.reserve(intervals.size() * 2);
  for (const auto& [a, b] : intervals) {
    pts.push_back(a);
    pts.push_back(b);
  }
  std::sort(pts.begin(), pts.end());
  std::vector<double> gaps;
  gaps.reserve(pts.size() - 1);
  for (std::size_t i = 1; i < pts.size(); ++i) gaps.push_back(pts[i] - pts[i - 1]);
  return gaps;
}

inline double pow3(int i) { return std::pow(3.0, static_cast<double>(i)); }

/// Fixed 200-term evaluation of the limit magnitude series.
inline double cantor_limit_long_sum(double length) {
  double s = 0.0;
  for (int i = 200; i >= 1; --i)
    s += std::ldexp(1.0, i) * std::tanh(length / (2.0 * pow3(i)));
  return 1.0 + 0.5 * s;
}

/// Doubly infinite series by brute force over i in [-120, 200].
inline double cantor_p_long_sum(double length) {
  double s = 0.0;
  for (int i = 200; i >= -120; --i)
    s += std::ldexp(1.0, i) * std::tanh(length / (2.0 * pow3(i)));
  return 0.5 * s;
}

inline double cantor_q2_long_sum(double length) {
  double s = 0.0;
  for (int i = 200; i >= 0; --i)
    s += std::ldexp(1.0, -i) * std::tanh(pow3(i) * length / 2.0);
  return 1.0 - 0.5 * s;
}

/// Composite Simpson rule with a fixed (even) panel count.
template <class F>
double simpson(F f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  double s = f(a) + f(b);
  for (int i = 1; i < panels; ++i) s += f(a + i * h) * ((i % 2 != 0) ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace oracles
