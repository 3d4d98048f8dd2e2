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

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "magnitude/errors.hpp"

namespace magnitude {

struct Quadrature {
  double tol = 1e-12;
  int max_refinements = 24;
};

namespace detail {

// 7-point Gauss-Legendre rule on [-1,1], exact through degree 13.
inline constexpr std::array<double, 7> kGlNodes = {
    -0.9491079123427585245261897, -0.7415311855993944398638648,
    -0.4058451513773971669066064, 0.0,
    0.4058451513773971669066064,  0.7415311855993944398638648,
    0.9491079123427585245261897};
inline constexpr std::array<double, 7> kGlWeights = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020,
    0.3818300505051189449503698, 0.2797053914892766679014678,
    0.1294849661688696932706114};

template <class F>
double gauss_panel(F& f, double a, double b, double& abs_accum) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double s = 0.0;
  for (int i = 0; i < 7; ++i) {
    const double v = kGlWeights[i] * f(mid + half * kGlNodes[i]);
    s += v;
    abs_accum += std::abs(v) * half;
  }
  return s * half;
}

template <class F>
double composite(F& f, double a, double b, std::int64_t panels, double& abs_accum) {
  const double h = (b - a) / static_cast<double>(panels);
  double s = 0.0;
  for (std::int64_t i = 0; i < panels; ++i)
    s += gauss_panel(f, a + static_cast<double>(i) * h, a + static_cast<double>(i + 1) * h,
                     abs_accum);
  return s;
}

}  // namespace detail

/// Integrates f over [a,b] by doubling the panel count of a fixed 7-point
/// Gauss-Legendre rule until two successive estimates agree to q.tol (with a
/// floating-point noise floor relative to the accumulated absolute mass).
template <class F>
double integrate(F&& f, double a, double b, const Quadrature& q = {}) {
  if (!(q.tol > 0.0) || q.max_refinements < 1)
    throw std::invalid_argument("integrate: invalid quadrature controls");
  double abs_accum = 0.0;
  double prev = detail::composite(f, a, b, 1, abs_accum);
  for (int r = 1; r <= q.max_refinements; ++r) {
    abs_accum = 0.0;
    const double cur = detail::composite(f, a, b, std::int64_t{1} << r, abs_accum);
    const double floor = 8.0 * std::numeric_limits<double>::epsilon() * abs_accum;
    if (std::abs(cur - prev) < std::max(q.tol, floor)) return cur;
    prev = cur;
  }
  throw NoConvergence("integrate: estimates did not settle within refinement cap");
}

/// Piecewise variant: integrates over consecutive [b_i, b_{i+1}] intervals of
/// the given partition, splitting the tolerance evenly across the pieces.
template <class F>
double integrate(F&& f, std::span<const double> breakpoints, const Quadrature& q = {}) {
  if (breakpoints.size() < 2)
    throw std::invalid_argument("integrate: need at least two breakpoints");
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!(breakpoints[i] > breakpoints[i - 1]))
      throw std::invalid_argument("integrate: breakpoints must increase");
  Quadrature piece = q;
  piece.tol = q.tol / static_cast<double>(breakpoints.size() - 1);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i)
    total += integrate(f, breakpoints[i], breakpoints[i + 1], piece);
  return total;
}

}  // namespace magnitude
