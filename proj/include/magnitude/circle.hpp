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
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "magnitude/magnitude.hpp"
#include "magnitude/metric_space.hpp"
#include "magnitude/quadrature.hpp"

namespace magnitude {

/// Circle of circumference `length` carried by a surface of relative
/// curvature kappa in (-inf, 1]: kappa = 1 is the intrinsic (arc-length)
/// metric, kappa = 0 the Euclidean chord metric, kappa < 0 hyperbolic.
struct CircleParams {
  double length = 1.0;
  double kappa = 0.0;

  CircleParams(double length_, double kappa_) : length(length_), kappa(kappa_) {
    if (!(length > 0.0) || !std::isfinite(length))
      throw OutOfRange("CircleParams: length must be positive");
    if (!(kappa <= 1.0) || !std::isfinite(kappa))
      throw OutOfRange("CircleParams: relative curvature must be finite and <= 1");
  }
};

namespace detail {

/// |kappa| below this uses the series branch to dodge 0/0 in sqrt(kappa).
inline constexpr double kKappaSeriesThreshold = 1e-8;

/// sin(pi s) with the argument reduced before multiplying by pi, so the
/// result keeps full relative accuracy near the zeros at integer s (plain
/// sin(pi * s) only resolves them to ~1e-16 absolute).
inline double sin_pi(double s) {
  const double r = std::remainder(s, 2.0);  // exact, in [-1, 1]
  const double a = std::abs(r);
  if (a <= 0.5) return std::sin(std::numbers::pi * r);
  return std::copysign(std::sin(std::numbers::pi * (1.0 - a)), r);
}

/// D_kappa on the unit-circumference circle, extended by the defining formula
/// (odd around s = 0).  No domain guard: probes may evaluate slightly outside
/// [0,1].
inline double unit_kappa_distance(double kappa, double s) {
  const double pi = std::numbers::pi;
  if (kappa == 1.0) {
    // sin^{-1}(sin(pi s))/pi collapses to the odd sawtooth: arc-length metric.
    const double t = std::remainder(s, 2.0);
    if (std::abs(t) <= 0.5) return t;
    return t > 0.0 ? 1.0 - t : -1.0 - t;
  }
  const double u = sin_pi(s);
  if (kappa > kKappaSeriesThreshold) {
    const double a = std::sqrt(kappa);
    return std::asin(a * u) / (a * pi);
  }
  if (kappa < -kKappaSeriesThreshold) {
    const double a = std::sqrt(-kappa);
    return std::asinh(a * u) / (a * pi);
  }
  return (u + kappa * u * u * u / 6.0) / pi;
}

/// Partition of [0,1] for the magnitude integral.  Always split at the
/// midpoint (kink of the kappa = 1 metric); for very long circles the mass
/// sits in O(1/length) neighbourhoods of the endpoints, so cluster
/// breakpoints there.
inline std::vector<double> integration_breakpoints(double length) {
  std::vector<double> left{0.0};
  if (length > 500.0) {
    for (double c = 1.0 / length; c < 0.4; c *= 8.0) left.push_back(c);
  }
  std::vector<double> bp = left;
  bp.push_back(0.5);
  for (std::size_t i = left.size(); i-- > 1;) bp.push_back(1.0 - left[i]);
  bp.push_back(1.0);
  return bp;
}

}  // namespace detail

/// Distance between two points x apart along a circle of circumference l:
/// kappa > 0:  (l / (sqrt(k) pi)) asin(sqrt(k) sin(pi x / l))
/// kappa = 0:  (l / pi) sin(pi x / l)
/// kappa < 0:  (l / (sqrt(-k) pi)) asinh(sqrt(-k) sin(pi x / l)),
/// with a series branch near kappa = 0, via D_{l,k}(l s) = l D_{1,k}(s).
inline double kappa_distance(const CircleParams& params, double x) {
  if (!(x >= 0.0) || !(x <= params.length))
    throw OutOfRange("kappa_distance: x must lie in [0, length]");
  return params.length * detail::unit_kappa_distance(params.kappa, x / params.length);
}

/// n evenly spaced points on the circle with the kappa-metric; homogeneous by
/// construction (distances depend only on the circular index gap).
inline FiniteMetricSpace circle_points_space(const CircleParams& params, int n) {
  if (n < 2) throw std::invalid_argument("circle_points_space: need n >= 2");
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<double> by_gap(un / 2 + 1, 0.0);
  for (std::size_t g = 1; g <= un / 2; ++g)
    by_gap[g] = params.length *
                detail::unit_kappa_distance(params.kappa, static_cast<double>(g) / n);
  Matrix d(un, un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = i + 1; j < un; ++j) {
      const std::size_t g = std::min(j - i, un - (j - i));
      d(i, j) = by_gap[g];
      d(j, i) = by_gap[g];
    }
  return FiniteMetricSpace(std::move(d));
}

/// Magnitude of the n-point circle by the homogeneous-space formula
/// n / sum_{j=1..n} exp(-D(j l / n)); the j = n term is the unit self-term.
inline double circle_points_magnitude(const CircleParams& params, int n) {
  if (n < 2) throw std::invalid_argument("circle_points_magnitude: need n >= 2");
  double denom = 0.0;
  for (int j = 1; j <= n; ++j)
    denom += std::exp(-params.length *
                      detail::unit_kappa_distance(params.kappa, static_cast<double>(j) / n));
  return static_cast<double>(n) / denom;
}

/// Magnitude of the continuum circle:
/// ( integral_0^1 exp(-l D_kappa(s)) ds )^{-1}.
inline double circle_magnitude(const CircleParams& params, const Quadrature& q = {}) {
  const std::vector<double> bp = detail::integration_breakpoints(params.length);
  const double integral = integrate(
      [&params](double s) {
        return std::exp(-params.length * detail::unit_kappa_distance(params.kappa, s));
      },
      std::span<const double>(bp), q);
  return 1.0 / integral;
}

/// Closed form for the intrinsic (kappa = 1) metric:
/// (l/2) / (1 - e^{-l/2}) = l/2 + (l/2)/(e^{l/2} - 1).
inline double intrinsic_circle_magnitude(double length) {
  if (!(length > 0.0))
    throw std::invalid_argument("intrinsic_circle_magnitude: length must be positive");
  return (length / 2.0) / (-std::expm1(-length / 2.0));
}

/// Large-length expansion l/2 + pi^2 (kappa - 1) / (2 l).
inline double circle_asymptotic(const CircleParams& params) {
  const double pi = std::numbers::pi;
  return params.length / 2.0 + pi * pi * (params.kappa - 1.0) / (2.0 * params.length);
}

struct ConvergenceEntry {
  int points = 0;
  double value = 0.0;
  double error = 0.0;
};

struct ConvergenceReport {
  double limit = 0.0;
  std::vector<ConvergenceEntry> entries;
};

/// |K^n| against the continuum value for each n in the (increasing) list.
inline ConvergenceReport circle_convergence(const CircleParams& params,
                                            std::span<const int> n_list,
                                            const Quadrature& q = {}) {
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] < 2)
      throw std::invalid_argument("circle_convergence: entries must be >= 2");
    if (i > 0 && n_list[i] <= n_list[i - 1])
      throw std::invalid_argument("circle_convergence: list must be increasing");
  }
  ConvergenceReport report;
  report.limit = circle_magnitude(params, q);
  for (int n : n_list) {
    const double v = circle_points_magnitude(params, n);
    report.entries.push_back({n, v, std::abs(v - report.limit)});
  }
  return report;
}

/// Finite-difference probe of d|C_l|/dl at l = 0 (where |C| -> 1).  Exposed
/// as a numeric probe only; no closed form is asserted.
inline double circle_zero_slope_probe(double kappa, double h = 1e-6,
                                      const Quadrature& q = {}) {
  if (!(h > 0.0)) throw std::invalid_argument("circle_zero_slope_probe: h must be positive");
  return (circle_magnitude(CircleParams(h, kappa), q) - 1.0) / h;
}

}  // namespace magnitude
