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

// Built-in verification suite: every check the library's documentation
// promises, runnable at desk scale (< 60 s on one core).  Used by the
// `verify` CLI subcommand and by the acceptance test binary.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "magnitude/cantor.hpp"
#include "magnitude/circle.hpp"
#include "magnitude/linear_spaces.hpp"
#include "magnitude/magnitude.hpp"
#include "magnitude/metric_space.hpp"
#include "magnitude/quadrature.hpp"
#include "magnitude/series.hpp"

namespace magnitude::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

/// Random cloud on a jittered grid (pitch 0.62, jitter 0.06), so pairwise
/// separation is at least 0.5 and exp(-t d) signals stay above solver noise.
inline std::vector<std::vector<double>> jittered_grid_cloud(std::mt19937& rng, int n,
                                                            int m) {
  std::uniform_real_distribution<double> jitter(-0.06, 0.06);
  int side = 1;
  while (std::pow(static_cast<double>(side), m) < n) ++side;
  std::vector<std::vector<double>> coords;
  coords.reserve(n);
  std::vector<int> idx(m, 0);
  for (int count = 0; count < n; ++count) {
    std::vector<double> p(m);
    for (int c = 0; c < m; ++c) p[c] = 0.62 * idx[c] + jitter(rng);
    coords.push_back(std::move(p));
    for (int c = 0; c < m; ++c) {
      if (++idx[c] < side) break;
      idx[c] = 0;
    }
  }
  return coords;
}

/// Independent route to the magnitude: full Gauss-Jordan inversion of the
/// exponentiated matrix, then the sum of all entries of the inverse.
inline double magnitude_by_full_inverse(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  Matrix a = exponentiated_matrix(space);
  Matrix inv = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    if (a(p, k) == 0.0) throw SingularMatrix("magnitude_by_full_inverse: zero pivot");
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
      if (i == k) continue;
      const double f = a(i, k);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s += inv(i, j);
  return s;
}

}  // namespace detail

/// 1. Linear closed form vs. matrix solver on 200 random gap tuples.
inline CriterionResult criterion_linear_oracle() {
  std::mt19937 rng(12301);
  std::uniform_int_distribution<int> points(1, 50);
  std::uniform_real_distribution<double> gap(0.01, 5.0);
  double worst_mag = 0.0, worst_w = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = points(rng);
    std::vector<double> gaps(n - 1);
    for (double& g : gaps) g = gap(rng);
    const GapTuple tuple(gaps);
    const double closed = linear_magnitude(tuple);
    const MagnitudeResult solved = magnitude(as_space(tuple));
    worst_mag = std::max(worst_mag, std::abs(closed - solved.value) / std::abs(closed));
    const Weighting closed_w = linear_weights(tuple);
    for (std::size_t i = 0; i < closed_w.weights.size(); ++i)
      worst_w = std::max(worst_w,
                         std::abs(closed_w.weights[i] - solved.weighting.weights[i]));
  }
  const bool ok = worst_mag <= 1e-9 && worst_w <= 1e-9;
  return {1, "linear closed form vs matrix solver",
          ok, "max rel magnitude diff " + detail::fmt(worst_mag) +
                  ", max weight diff " + detail::fmt(worst_w)};
}

/// 2. Homogeneous fast path vs. general solver on evenly spaced circles.
inline CriterionResult criterion_homogeneous_agreement() {
  double worst = 0.0;
  for (double length : {0.5, 5.0}) {
    for (double kappa : {0.0, 1.0}) {
      const CircleParams params(length, kappa);
      for (int n = 3; n <= 64; ++n) {
        const FiniteMetricSpace space = circle_points_space(params, n);
        const double fast = magnitude_homogeneous(space);
        const double solved = magnitude(space).value;
        worst = std::max(worst, std::abs(fast - solved) / std::abs(fast));
      }
    }
  }
  return {2, "homogeneous fast path vs general solver", worst <= 1e-10,
          "max rel diff " + detail::fmt(worst)};
}

/// 3. Uniform subdivisions of a length-7 segment approach 7/2 + 1 = 4.5,
///    under the bound l^2 / (4(n-1)).
inline CriterionResult criterion_segment_limit() {
  const double length = 7.0;
  const std::vector<int> ns = {10, 100, 1000};
  const auto table =
      segment_convergence({length, GapScheme::uniform, 2, 42}, ns);
  bool ok = true;
  std::string detail_str;
  double prev = std::numeric_limits<double>::infinity();
  for (const auto& row : table) {
    const double bound = length * length / (4.0 * (row.points - 1));
    if (!(row.error < prev) || !(row.error < bound)) ok = false;
    prev = row.error;
    detail_str += "n=" + std::to_string(row.points) + " err=" + detail::fmt(row.error) +
                  " bound=" + detail::fmt(bound) + "  ";
  }
  return {3, "segment magnitudes approach l/2 + 1", ok, detail_str};
}

/// 4. Spaces with every distance above ln(n-1) are positive definite and
///    have a defined magnitude.
inline CriterionResult criterion_separation_implies_pd() {
  std::mt19937 rng(12304);
  std::uniform_int_distribution<int> points(2, 40);
  std::uniform_int_distribution<int> dims(1, 5);
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = points(rng);
    const int m = dims(rng);
    FiniteMetricSpace space = from_points(detail::jittered_grid_cloud(rng, n, m));
    const double target = n >= 2 ? std::log(static_cast<double>(n - 1)) : 0.0;
    space = scale(space, (target + 0.1) / space.min_offdiagonal());
    try {
      const MagnitudeResult r = magnitude(space);
      if (!is_sufficiently_separated(space) || !r.diagnostics.positive_definite)
        ++failures;
    } catch (const MagnitudeUndefined&) {
      ++failures;
    }
  }
  return {4, "separation above ln(n-1) implies positive definite", failures == 0,
          std::to_string(failures) + " failures in 100 spaces"};
}

/// 5. |tX| approaches the point count: decreasing error over t in
///    {8,16,32,64} and below 1e-3 at t = 64, for 20 random clouds.
inline CriterionResult criterion_scaling_to_cardinality() {
  std::mt19937 rng(12305);
  std::uniform_int_distribution<int> points(2, 20);
  std::uniform_int_distribution<int> dims(2, 3);
  int failures = 0;
  double worst_final = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = points(rng);
    const FiniteMetricSpace space =
        from_points(detail::jittered_grid_cloud(rng, n, dims(rng)));
    double prev = std::numeric_limits<double>::infinity();
    bool ok = true;
    double err = 0.0;
    for (double t : {8.0, 16.0, 32.0, 64.0}) {
      err = std::abs(magnitude(scale(space, t)).value - n);
      if (!(err < prev)) ok = false;
      prev = err;
    }
    worst_final = std::max(worst_final, err);
    if (!ok || !(err < 1e-3)) ++failures;
  }
  return {5, "|tX| approaches the number of points", failures == 0,
          std::to_string(failures) + " failures; worst error at t=64: " +
              detail::fmt(worst_final)};
}

/// 6. Cantor decomposition: p + q2 reconstructs the limit magnitude,
///    p(3l) = 2 p(l), and q2 vanishes for long sets.
inline CriterionResult criterion_cantor_decomposition() {
  double worst_sum = 0.0, worst_func = 0.0;
  for (double length : {0.3, 1.0, 3.0, 9.0}) {
    const CantorParams p(length);
    worst_sum = std::max(worst_sum, std::abs(cantor_p(p) + cantor_q2(p) -
                                             cantor_magnitude(p)));
    worst_func = std::max(worst_func, std::abs(cantor_p(CantorParams(3.0 * length)) -
                                               2.0 * cantor_p(p)));
  }
  const double q2_tail = std::abs(cantor_q2(CantorParams(50.0)));
  const bool ok = worst_sum <= 1e-10 && worst_func <= 1e-10 && q2_tail < 1e-9;
  return {6, "cantor decomposition and functional equation", ok,
          "max |p+q2-T| " + detail::fmt(worst_sum) + ", max |p(3l)-2p(l)| " +
              detail::fmt(worst_func) + ", |q2(50)| " + detail::fmt(q2_tail)};
}

/// 7. The periodic factor stays inside (1.205, 1.206) across one period.
inline CriterionResult criterion_cantor_bounds() {
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double length = std::pow(3.0, static_cast<double>(i) / 64.0);
    const double f = cantor_f(length);
    lo = std::min(lo, f);
    hi = std::max(hi, f);
  }
  const bool ok = lo > 1.205 && hi < 1.206;
  return {7, "cantor periodic factor within (1.205, 1.206)", ok,
          "range [" + detail::fmt(lo) + ", " + detail::fmt(hi) + "]"};
}

/// 8. Fourier expansion of the periodic factor: mean 1.2054, first harmonic
///    2.48e-4 (10%), second harmonic 3.36e-8 (20%).
inline CriterionResult criterion_cantor_fourier() {
  const FourierReport report = cantor_fourier(1024, 2);
  const double amp1 = report.harmonics.at(0).amplitude;
  const double amp2 = report.harmonics.at(1).amplitude;
  const bool ok = std::abs(report.mean - 1.2054) <= 5e-4 &&
                  std::abs(amp1 - 2.48e-4) <= 0.10 * 2.48e-4 &&
                  std::abs(amp2 - 3.36e-8) <= 0.20 * 3.36e-8;
  return {8, "cantor fourier coefficients", ok,
          "mean " + detail::fmt(report.mean) + ", amp1 " + detail::fmt(amp1) +
              ", amp2 " + detail::fmt(amp2)};
}

/// 9. Quadrature route equals the intrinsic-metric closed form.
inline CriterionResult criterion_intrinsic_circle_identity() {
  double worst = 0.0;
  for (double length : {0.5, 5.0, 50.0}) {
    const double quad = circle_magnitude(CircleParams(length, 1.0));
    const double closed = intrinsic_circle_magnitude(length);
    worst = std::max(worst, std::abs(quad - closed) / closed);
  }
  return {9, "intrinsic circle identity", worst <= 1e-10,
          "max rel diff " + detail::fmt(worst)};
}

/// 10. Circle asymptotics: l * |C - (l/2 + pi^2 (kappa-1)/(2l))| decreasing
///     over l in {20,40,80} and below 0.05 at l = 80.
inline CriterionResult criterion_circle_asymptotics() {
  bool ok = true;
  std::string detail_str;
  for (double kappa : {1.0, 0.0, -1.0, -10.0}) {
    double prev = std::numeric_limits<double>::infinity();
    double last = 0.0;
    std::string chain;
    for (double length : {20.0, 40.0, 80.0}) {
      const CircleParams params(length, kappa);
      last = length * std::abs(circle_magnitude(params) - circle_asymptotic(params));
      if (!(last < prev)) ok = false;
      prev = last;
      chain += (chain.empty() ? "" : " > ") + detail::fmt(last);
    }
    if (!(last < 0.05)) ok = false;
    detail_str += "kappa=" + detail::fmt(kappa) + ": " + chain +
                  (last < 0.05 ? " (<0.05)  " : " (>=0.05)  ");
  }
  return {10, "circle asymptotic residual", ok, detail_str};
}

/// 11. Evenly spaced circle magnitudes converge to the integral value.
inline CriterionResult criterion_riemann_convergence() {
  double worst = 0.0;
  for (double kappa : {0.0, 1.0}) {
    const CircleParams params(5.0, kappa);
    const double limit = circle_magnitude(params);
    worst = std::max(worst, std::abs(circle_points_magnitude(params, 4096) - limit));
  }
  return {11, "riemann convergence at n=4096", worst < 1e-6,
          "max |K^n - C| " + detail::fmt(worst)};
}

namespace detail {

struct PropertyCheck {
  std::string name;
  bool passed;
};

inline double detail_pow3(std::int64_t i) { return std::pow(3.0, static_cast<double>(i)); }

inline void run_metric_core_properties(std::vector<PropertyCheck>& out) {
  std::mt19937 rng(22001);
  std::uniform_real_distribution<double> gap(0.05, 3.0);
  std::uniform_real_distribution<double> factor(0.1, 10.0);
  bool compose_ok = true, validate_ok = true, min_ok = true;
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<double> gaps(1 + trial % 12);
    for (double& g : gaps) g = gap(rng);
    const FiniteMetricSpace space = as_space(GapTuple(gaps));
    const double s = factor(rng), t = factor(rng);
    const FiniteMetricSpace twice = scale(scale(space, s), t);
    const FiniteMetricSpace once = scale(space, s * t);
    for (std::size_t i = 0; i < space.size(); ++i)
      for (std::size_t j = 0; j < space.size(); ++j) {
        const double a = twice.distance(i, j), b = once.distance(i, j);
        if (std::abs(a - b) > 1e-14 * std::max(std::abs(a), 1.0)) compose_ok = false;
      }
    const FiniteMetricSpace cloud =
        from_points(jittered_grid_cloud(rng, 2 + trial % 14, 1 + trial % 4));
    if (!validate(cloud).ok) validate_ok = false;
    const double tt = factor(rng);
    if (scale(cloud, tt).min_offdiagonal() != tt * cloud.min_offdiagonal()) min_ok = false;
  }
  out.push_back({"scale composition", compose_ok});
  out.push_back({"point clouds validate", validate_ok});
  out.push_back({"min distance scales exactly", min_ok});
}

inline void run_numerics_properties(std::vector<PropertyCheck>& out) {
  // positive definiteness of a separated space's exponentiated matrix
  std::mt19937 rng(22002);
  bool pd_ok = true;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial * 3;
    FiniteMetricSpace space = from_points(jittered_grid_cloud(rng, n, 2));
    space = scale(space, (std::log(n - 1.0) + 0.1) / space.min_offdiagonal());
    const std::vector<double> ones(space.size(), 1.0);
    if (!solve_symmetric(exponentiated_matrix(space), ones).diagnostics.positive_definite)
      pd_ok = false;
  }
  out.push_back({"separated space gives positive definite system", pd_ok});

  bool poly_ok = true;
  for (int degree = 0; degree <= 13; ++degree) {
    const double value =
        integrate([degree](double s) { return std::pow(s, degree); }, 0.0, 1.0);
    if (std::abs(value - 1.0 / (degree + 1)) > 1e-12) poly_ok = false;
  }
  out.push_back({"quadrature exact on low-degree polynomials", poly_ok});

  const auto term = [](std::int64_t i) {
    return std::ldexp(1.0, static_cast<int>(i)) * std::tanh(1.0 / (2.0 * detail_pow3(i)));
  };
  const auto tail = [](std::int64_t n) {
    return 1.5 * std::pow(2.0 / 3.0, static_cast<double>(n));
  };
  const double s1 = sum_series(term, tail, 1e-10);
  const double s2 = sum_series(term, tail, 1e-13);
  out.push_back({"series result independent of tolerance", std::abs(s1 - s2) <= 1e-10 + 1e-13});
}

inline void run_solver_properties(std::vector<PropertyCheck>& out) {
  std::mt19937 rng(22003);
  std::uniform_int_distribution<int> points(2, 40);
  std::uniform_int_distribution<int> dims(1, 5);

  bool two_routes_ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    const FiniteMetricSpace space =
        from_points(jittered_grid_cloud(rng, points(rng), dims(rng)));
    const double direct = magnitude(space).value;
    const double via_inverse = magnitude_by_full_inverse(space);
    if (std::abs(direct - via_inverse) > 1e-9 * std::abs(direct)) two_routes_ok = false;
  }
  out.push_back({"solver agrees with full inversion", two_routes_ok});

  bool homog_ok = true;
  for (int n : {3, 16, 129, 512}) {
    const FiniteMetricSpace space = circle_points_space(CircleParams(5.0, 0.0), n);
    const double fast = magnitude_homogeneous(space);
    const double solved = magnitude(space).value;
    if (std::abs(fast - solved) > 1e-10 * std::abs(fast)) homog_ok = false;
  }
  out.push_back({"homogeneous agreement up to n=512", homog_ok});

  bool to_n_ok = true;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = points(rng);
    const FiniteMetricSpace space =
        from_points(jittered_grid_cloud(rng, n, dims(rng)));
    double prev = std::numeric_limits<double>::infinity();
    double err = 0.0;
    for (double t : {8.0, 16.0, 32.0, 64.0}) {
      err = std::abs(magnitude(scale(space, t)).value - n);
      if (!(err < prev)) to_n_ok = false;
      prev = err;
    }
    if (!(err < 1e-3)) to_n_ok = false;
  }
  out.push_back({"scaled magnitude monotonically approaches n", to_n_ok});

  bool perm_ok = true;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = points(rng);
    const FiniteMetricSpace space =
        from_points(jittered_grid_cloud(rng, n, dims(rng)));
    std::vector<std::size_t> perm(space.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix d(space.size(), space.size());
    for (std::size_t i = 0; i < space.size(); ++i)
      for (std::size_t j = 0; j < space.size(); ++j)
        d(i, j) = space.distance(perm[i], perm[j]);
    const double a = magnitude(space).value;
    const double b = magnitude(FiniteMetricSpace(std::move(d))).value;
    if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a))) perm_ok = false;
  }
  out.push_back({"magnitude invariant under relabeling", perm_ok});
}

inline void run_linear_properties(std::vector<PropertyCheck>& out) {
  bool tanh_ok = true;
  for (int i = 1; i <= 1000; ++i) {
    const double c = 10.0 * i / 1000.0;
    if (!(std::abs(std::tanh(c) - c) <= c * c)) tanh_ok = false;
  }
  out.push_back({"tanh remainder bound", tanh_ok});

  const std::vector<int> ns = {4, 8, 16, 32, 64, 128, 256};
  const auto table = segment_convergence({3.0, GapScheme::uniform, 2, 42}, ns);
  bool mono_ok = true;
  for (std::size_t i = 1; i < table.size(); ++i)
    if (!(table[i].error < table[i - 1].error)) mono_ok = false;
  out.push_back({"uniform segment errors decrease", mono_ok});
}

inline void run_cantor_properties(std::vector<PropertyCheck>& out) {
  bool recursion_ok = true;
  for (double length : {0.5, 1.0, 2.0})
    for (int k = 0; k <= 10; ++k) {
      const double lhs = cantor_approx_magnitude(3.0 * length, k + 1);
      const double rhs =
          1.0 + 2.0 * (cantor_approx_magnitude(length, k) - 1.0) + std::tanh(length / 2.0);
      if (std::abs(lhs - rhs) > 1e-12) recursion_ok = false;
    }
  out.push_back({"self-similar recursion of approximations", recursion_ok});

  bool gaps_ok = true;
  for (int k = 0; k <= 8; ++k) {
    const double closed = cantor_approx_magnitude(1.7, k);
    const double from_gaps = linear_magnitude(cantor_approx_gaps(1.7, k));
    if (std::abs(closed - from_gaps) > 1e-10) gaps_ok = false;
  }
  out.push_back({"closed form equals gap-tuple magnitude", gaps_ok});

  bool monotone_ok = true;
  for (double length : {0.4, 2.0, 11.0}) {
    const double limit = cantor_magnitude(CantorParams(length, 1e-14));
    double prev = -std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 40; ++k) {
      const double v = cantor_approx_magnitude(length, k);
      // Strict growth while increments are resolvable; past that the closed
      // forms agree to rounding, so only require no real decrease.
      if (k <= 8 && !(v > prev)) monotone_ok = false;
      if (v < prev - 8e-16 * std::max(1.0, std::abs(v))) monotone_ok = false;
      if (v > limit + 1e-12) monotone_ok = false;
      prev = v;
    }
  }
  out.push_back({"approximations increase toward the limit", monotone_ok});

  bool zero_ok = true;
  for (double length : {0.2, 0.9, 4.0, 27.0}) {
    const CantorParams p(length);
    if (std::abs(cantor_magnitude(p) - cantor_p(p) - cantor_q2(p)) > 1e-10) zero_ok = false;
  }
  out.push_back({"decomposition residual vanishes", zero_ok});

  bool growth_ok = true;
  for (double length : {0.4, 1.0, 2.7}) {
    const double ratio =
        cantor_p(CantorParams(3.0 * length)) / cantor_p(CantorParams(length));
    if (std::abs(std::log(ratio) / std::log(3.0) - cantor_dimension) > 1e-10)
      growth_ok = false;
  }
  out.push_back({"growth exponent is log_3 2", growth_ok});
}

inline void run_circle_properties(std::vector<PropertyCheck>& out) {
  const double pi = std::numbers::pi;

  bool endpoints_ok = true;
  for (double length : {1.0, 7.0}) {
    for (int j = 0; j <= 256; ++j) {
      const double x = length * j / 256.0;
      const double arc = std::min(x, length - x);
      const double chord = (length / pi) * std::sin(pi * x / length);
      if (std::abs(kappa_distance(CircleParams(length, 1.0), x) - arc) > 1e-12)
        endpoints_ok = false;
      if (std::abs(kappa_distance(CircleParams(length, 0.0), x) - chord) > 1e-12)
        endpoints_ok = false;
      for (double kappa : {1e-6, -1e-6})
        if (std::abs(kappa_distance(CircleParams(length, kappa), x) - chord) >
            1e-5 * length)
          endpoints_ok = false;
    }
  }
  out.push_back({"metric family endpoints (arc and chord)", endpoints_ok});

  bool deriv_ok = true;
  // Power-of-two step near 1e-5 so the abscissas 1 +- h are exact; a decimal
  // step makes them asymmetric by ~1e-16, which h^2 amplifies past 1e-6.
  const double h = std::ldexp(1.0, -17);
  for (double kappa : {1.0, 0.5, 0.0, -1.0, -10.0}) {
    const auto d = [kappa](double s) {
      return magnitude::detail::unit_kappa_distance(kappa, s);
    };
    const double d0 = (d(h) - d(-h)) / (2 * h);
    const double d1 = (d(1 + h) - d(1 - h)) / (2 * h);
    const double dd0 = (d(h) - 2 * d(0.0) + d(-h)) / (h * h);
    const double dd1 = (d(1 + h) - 2 * d(1.0) + d(1 - h)) / (h * h);
    if (std::abs(d0 - 1.0) > 1e-6 || std::abs(d1 + 1.0) > 1e-6 ||
        std::abs(dd0) > 1e-6 || std::abs(dd1) > 1e-6)
      deriv_ok = false;
  }
  out.push_back({"kappa metrics agree to second order at endpoints", deriv_ok});

  bool resid_ok = true;
  for (double kappa : {1.0, 0.0, -1.0, -10.0}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double length : {20.0, 40.0, 80.0}) {
      const CircleParams params(length, kappa);
      const double r =
          length * std::abs(circle_magnitude(params) - circle_asymptotic(params));
      if (!(r < prev)) resid_ok = false;
      prev = r;
    }
  }
  out.push_back({"scaled asymptotic residual decreases", resid_ok});

  out.push_back({"chord-metric magnitude near l/2 at l=200",
                 std::abs(circle_magnitude(CircleParams(200.0, 0.0)) - 100.0) < 0.03});

  bool triangle_ok = true;
  for (double kappa : {1.0, 0.5, 0.0, -1.0, -10.0})
    if (!validate(circle_points_space(CircleParams(3.0, kappa), 64)).ok)
      triangle_ok = false;
  out.push_back({"kappa metrics satisfy the triangle inequality", triangle_ok});
}

}  // namespace detail

/// 12. The documented module properties, bundled.
inline CriterionResult criterion_property_suite() {
  std::vector<detail::PropertyCheck> checks;
  detail::run_metric_core_properties(checks);
  detail::run_numerics_properties(checks);
  detail::run_solver_properties(checks);
  detail::run_linear_properties(checks);
  detail::run_cantor_properties(checks);
  detail::run_circle_properties(checks);
  std::string failed;
  for (const auto& c : checks)
    if (!c.passed) failed += (failed.empty() ? "" : "; ") + c.name;
  const bool ok = failed.empty();
  return {12, "module property suite", ok,
          ok ? std::to_string(checks.size()) + " properties hold" : "failed: " + failed};
}

inline std::vector<CriterionResult> run_all() {
  return {criterion_linear_oracle(),
          criterion_homogeneous_agreement(),
          criterion_segment_limit(),
          criterion_separation_implies_pd(),
          criterion_scaling_to_cardinality(),
          criterion_cantor_decomposition(),
          criterion_cantor_bounds(),
          criterion_cantor_fourier(),
          criterion_intrinsic_circle_identity(),
          criterion_circle_asymptotics(),
          criterion_riemann_convergence(),
          criterion_property_suite()};
}

}  // namespace magnitude::verify
