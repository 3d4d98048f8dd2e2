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
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "magnitude/linear_spaces.hpp"
#include "magnitude/series.hpp"

namespace magnitude {

/// log_3(2), the growth exponent (and Hausdorff dimension) of the middle
/// thirds construction.
inline const double cantor_dimension = std::log(2.0) / std::log(3.0);

/// Point counts use 2^(k+1); anything past this overflows 64-bit counts.
inline constexpr int kMaxCantorLevel = 62;

struct CantorParams {
  double length = 1.0;
  double eps = 1e-12;

  CantorParams(double length_, double eps_ = 1e-12) : length(length_), eps(eps_) {
    if (!(length > 0.0) || !std::isfinite(length))
      throw std::invalid_argument("CantorParams: length must be positive");
    if (!(eps > 0.0))
      throw std::invalid_argument("CantorParams: eps must be positive");
  }
};

namespace detail {

inline double pow3(std::int64_t i) {
  return std::pow(3.0, static_cast<double>(i));
}

inline void check_cantor_level(int level) {
  if (level < 0 || level > kMaxCantorLevel)
    throw std::invalid_argument("cantor: level must lie in [0, 62]");
}

inline void build_cantor_gaps(double length, int level, std::vector<double>& out) {
  if (level == 0) {
    out.push_back(length);
    return;
  }
  // Two copies at scale 1/3 separated by the removed middle third.
  build_cantor_gaps(length / 3.0, level - 1, out);
  out.push_back(length / 3.0);
  build_cantor_gaps(length / 3.0, level - 1, out);
}

/// sum_{i>=1} 2^i tanh(l / (2*3^i)); tail bound (3l/2)(2/3)^N from tanh c <= c.
inline double cantor_positive_series(double length, double eps) {
  return sum_series(
      [length](std::int64_t i) {
        return std::ldexp(1.0, static_cast<int>(i)) * std::tanh(length / (2.0 * pow3(i)));
      },
      [length](std::int64_t n) {
        return 1.5 * length * std::pow(2.0 / 3.0, static_cast<double>(n));
      },
      eps, 1);
}

/// sum_{i>=0} 2^-i tanh(3^i l / 2); tail bound 2^(1-N) from tanh <= 1.
inline double cantor_saturating_series(double length, double eps) {
  return sum_series(
      [length](std::int64_t i) {
        return std::ldexp(1.0, -static_cast<int>(i)) * std::tanh(pow3(i) * length / 2.0);
      },
      [](std::int64_t n) { return std::ldexp(1.0, 1 - static_cast<int>(n)); },
      eps, 0);
}

}  // namespace detail

/// Left-to-right gap sequence of the level-k middle-thirds approximation:
/// 2^(k+1) points, 2^(k+1) - 1 gaps summing to the total length.
inline GapTuple cantor_approx_gaps(double length, int level) {
  if (!(length > 0.0))
    throw std::invalid_argument("cantor_approx_gaps: length must be positive");
  detail::check_cantor_level(level);
  std::vector<double> gaps;
  gaps.reserve((std::size_t{1} << (level + 1)) - 1);
  detail::build_cantor_gaps(length, level, gaps);
  return GapTuple(std::move(gaps));
}

/// Closed form 1 + 2^k tanh(l/(2*3^k)) + (1/2) sum_{i=1..k} 2^i tanh(l/(2*3^i)).
inline double cantor_approx_magnitude(double length, int level) {
  if (!(length > 0.0))
    throw std::invalid_argument("cantor_approx_magnitude: length must be positive");
  detail::check_cantor_level(level);
  double sum = 0.0;
  for (int i = level; i >= 1; --i)
    sum += std::ldexp(1.0, i) * std::tanh(length / (2.0 * detail::pow3(i)));
  return 1.0 + std::ldexp(1.0, level) * std::tanh(length / (2.0 * detail::pow3(level))) +
         0.5 * sum;
}

/// Limit of the approximations: 1 + (1/2) sum_{i>=1} 2^i tanh(l/(2*3^i)),
/// truncated with error at most eps.
inline double cantor_magnitude(const CantorParams& p) {
  return 1.0 + 0.5 * detail::cantor_positive_series(p.length, p.eps);
}

/// The self-similar part p(l) = (1/2) sum over all integers i of
/// 2^i tanh(l/(2*3^i)); satisfies p(3l) = 2 p(l).
inline double cantor_p(const CantorParams& p) {
  const double pos = detail::cantor_positive_series(p.length, p.eps);
  const double sat = detail::cantor_saturating_series(p.length, p.eps);
  return 0.5 * (pos + sat);
}

/// The asymptotically vanishing part
/// q2(l) = 1 - (1/2) sum_{i>=0} 2^-i tanh(3^i l / 2).
inline double cantor_q2(const CantorParams& p) {
  return 1.0 - 0.5 * detail::cantor_saturating_series(p.length, p.eps);
}

/// Multiplicatively periodic factor f(l) = p(l) l^(-log_3 2); f(3l) = f(l).
inline double cantor_f(double length, double eps = 1e-12) {
  return cantor_p(CantorParams(length, eps)) * std::pow(length, -cantor_dimension);
}

struct Harmonic {
  int frequency = 0;     // positive integer k
  double amplitude = 0;  // nonnegative
  double phase = 0;      // in [0, 2*pi), convention amp * sin(2*pi*k*x + phase)
};

struct FourierReport {
  double mean = 0.0;
  std::vector<Harmonic> harmonics;
};

/// Samples f(3^x) at x = j/samples and extracts leading Fourier harmonics in
/// the convention f(3^x) ~ mean + sum_k amp_k sin(2*pi*k*x + phase_k).
/// f is analytic and 1-periodic in x, so a plain DFT is spectrally accurate.
inline FourierReport cantor_fourier(int samples, int harmonics, double eps = 1e-12) {
  if (samples < 256 || (samples & (samples - 1)) != 0)
    throw std::invalid_argument("cantor_fourier: samples must be a power of two >= 256");
  if (harmonics < 1 || harmonics >= samples / 2)
    throw std::invalid_argument("cantor_fourier: harmonics must lie in [1, samples/2)");

  const int n = samples;
  std::vector<double> f(n);
  for (int j = 0; j < n; ++j)
    f[j] = cantor_f(std::pow(3.0, static_cast<double>(j) / n), eps);

  FourierReport report;
  double mean = 0.0;
  for (double v : f) mean += v;
  report.mean = mean / n;

  const double two_pi = 2.0 * std::numbers::pi;
  for (int k = 1; k <= harmonics; ++k) {
    std::complex<double> c(0.0, 0.0);
    for (int j = 0; j < n; ++j) {
      const double ang = -two_pi * static_cast<double>(j) * k / n;
      c += f[j] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    c /= static_cast<double>(n);
    // 2|c| cos(2*pi*k*x + arg c) = 2|c| sin(2*pi*k*x + arg c + pi/2)
    double phase = std::arg(c) + std::numbers::pi / 2.0;
    phase = std::fmod(phase, two_pi);
    if (phase < 0.0) phase += two_pi;
    report.harmonics.push_back({k, 2.0 * std::abs(c), phase});
  }
  return report;
}

}  // namespace magnitude
