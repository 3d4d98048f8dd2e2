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

#include <catch2/catch.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "magnitude/circle.hpp"
#include "magnitude/magnitude.hpp"
#include "support/oracles.hpp"

namespace mg = magnitude;
using std::numbers::pi;

TEST_CASE("CircleParams guards") {
  REQUIRE_THROWS_AS(mg::CircleParams(1.0, 1.5), mg::OutOfRange);
  REQUIRE_THROWS_AS(mg::CircleParams(0.0, 0.0), mg::OutOfRange);
  REQUIRE_THROWS_AS(mg::CircleParams(-2.0, 0.0), mg::OutOfRange);
  REQUIRE_THROWS_AS(mg::CircleParams(1.0, -std::numeric_limits<double>::infinity()),
                    mg::OutOfRange);
  REQUIRE_THROWS_AS(mg::CircleParams(1.0, std::nan("")), mg::OutOfRange);
}

TEST_CASE("kappa_distance branches") {
  SECTION("intrinsic metric is the arc length, exactly for unit circumference") {
    const mg::CircleParams params(1.0, 1.0);
    REQUIRE(mg::kappa_distance(params, 0.25) == 0.25);
    REQUIRE(mg::kappa_distance(params, 0.5) == 0.5);
    REQUIRE(mg::kappa_distance(params, 0.75) == 0.25);
    const mg::CircleParams seven(7.0, 1.0);
    for (int j = 0; j <= 64; ++j) {
      const double x = 7.0 * j / 64.0;
      REQUIRE(mg::kappa_distance(seven, x) ==
              Approx(std::min(x, 7.0 - x)).margin(1e-12));
    }
  }
  SECTION("chord metric diameter is l/pi") {
    const mg::CircleParams params(3.0, 0.0);
    REQUIRE(mg::kappa_distance(params, 1.5) == Approx(3.0 / pi).epsilon(1e-15));
  }
  SECTION("zero at both endpoints, exactly") {
    for (double kappa : {1.0, 0.4, 0.0, -2.0}) {
      const mg::CircleParams params(5.0, kappa);
      REQUIRE(mg::kappa_distance(params, 0.0) == 0.0);
      REQUIRE(mg::kappa_distance(params, 5.0) == 0.0);
    }
  }
  SECTION("scaling property D_{l,k}(l s) = l D_{1,k}(s)") {
    for (double kappa : {1.0, 0.3, 0.0, -5.0})
      for (double s : {0.1, 0.37, 0.5, 0.93}) {
        const double l = 11.0;
        const double big = mg::kappa_distance(mg::CircleParams(l, kappa), l * s);
        const double unit = mg::kappa_distance(mg::CircleParams(1.0, kappa), s);
        REQUIRE(big == Approx(l * unit).epsilon(1e-14));
      }
  }
  SECTION("domain guard") {
    const mg::CircleParams params(2.0, 0.0);
    REQUIRE_THROWS_AS(mg::kappa_distance(params, -0.1), mg::OutOfRange);
    REQUIRE_THROWS_AS(mg::kappa_distance(params, 2.1), mg::OutOfRange);
  }
  SECTION("family endpoints on a dense grid") {
    for (double length : {1.0, 7.0}) {
      for (int j = 0; j <= 256; ++j) {
        const double x = length * j / 256.0;
        const double arc = std::min(x, length - x);
        const double chord = (length / pi) * std::sin(pi * x / length);
        REQUIRE(mg::kappa_distance(mg::CircleParams(length, 1.0), x) ==
                Approx(arc).margin(1e-12));
        REQUIRE(mg::kappa_distance(mg::CircleParams(length, 0.0), x) ==
                Approx(chord).margin(1e-12));
      }
    }
  }
  SECTION("continuity across kappa = 0, including the series branch") {
    for (double kappa : {1e-6, -1e-6, 5e-9, -5e-9}) {
      const mg::CircleParams params(4.0, kappa);
      for (int j = 0; j <= 64; ++j) {
        const double x = 4.0 * j / 64.0;
        const double chord = (4.0 / pi) * std::sin(pi * x / 4.0);
        REQUIRE(std::abs(mg::kappa_distance(params, x) - chord) < 1e-5 * 4.0);
      }
    }
  }
  SECTION("metrics agree to second order at the endpoints") {
    const double h = std::ldexp(1.0, -17);  // exact abscissas around 0 and 1
    for (double kappa : {1.0, 0.5, 0.0, -1.0, -10.0}) {
      auto d = [kappa](double s) { return mg::detail::unit_kappa_distance(kappa, s); };
      REQUIRE((d(h) - d(-h)) / (2 * h) == Approx(1.0).margin(1e-6));
      REQUIRE((d(1 + h) - d(1 - h)) / (2 * h) == Approx(-1.0).margin(1e-6));
      REQUIRE((d(h) - 2 * d(0.0) + d(-h)) / (h * h) == Approx(0.0).margin(1e-6));
      REQUIRE((d(1 + h) - 2 * d(1.0) + d(1 - h)) / (h * h) == Approx(0.0).margin(1e-6));
    }
  }
}

TEST_CASE("circle_points_space") {
  SECTION("four arc-metric points on circumference four") {
    const auto space = mg::circle_points_space(mg::CircleParams(4.0, 1.0), 4);
    REQUIRE(space.distance(0, 1) == 1.0);
    REQUIRE(space.distance(0, 2) == 2.0);
    REQUIRE(space.distance(0, 3) == 1.0);
  }
  SECTION("intrinsic metric recovers (l/n) min(|i-j|, n-|i-j|)") {
    const double length = 5.5;
    const int n = 9;
    const auto space = mg::circle_points_space(mg::CircleParams(length, 1.0), n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int g = std::min(std::abs(i - j), n - std::abs(i - j));
        REQUIRE(space.distance(i, j) ==
                Approx((length / n) * g).epsilon(1e-15).margin(0.0));
      }
  }
  SECTION("two points sit at the chord diameter") {
    const auto space = mg::circle_points_space(mg::CircleParams(3.0, 0.0), 2);
    REQUIRE(space.distance(0, 1) == Approx(3.0 / pi).epsilon(1e-15));
  }
  SECTION("always homogeneous") {
    for (double kappa : {1.0, 0.2, 0.0, -3.0})
      REQUIRE(mg::is_homogeneous(mg::circle_points_space(mg::CircleParams(2.0, kappa), 17)));
  }
  SECTION("kappa metrics are genuine metrics") {
    for (double kappa : {1.0, 0.5, 0.0, -1.0, -10.0})
      for (int n : {5, 64})
        REQUIRE(mg::validate(mg::circle_points_space(mg::CircleParams(3.0, kappa), n)).ok);
  }
  REQUIRE_THROWS_AS(mg::circle_points_space(mg::CircleParams(1.0, 0.0), 1),
                    std::invalid_argument);
}

TEST_CASE("circle_points_magnitude") {
  SECTION("matches the chord-metric sum termwise") {
    const double length = 6.0;
    for (int n : {3, 10, 37}) {
      double denom = 0.0;
      for (int j = 1; j <= n; ++j)
        denom += std::exp(-(length / pi) * std::sin(pi * j / n));
      REQUIRE(mg::circle_points_magnitude(mg::CircleParams(length, 0.0), n) ==
              Approx(n / denom).epsilon(1e-13));
    }
  }
  SECTION("odd intrinsic circles match the geometric-sum closed form") {
    const double length = 4.2;
    for (int m : {1, 5, 20}) {
      const int n = 2 * m + 1;
      double denom = 1.0;
      for (int k = 1; k <= m; ++k) denom += 2.0 * std::exp(-length * k / n);
      REQUIRE(mg::circle_points_magnitude(mg::CircleParams(length, 1.0), n) ==
              Approx(n / denom).epsilon(1e-13));
    }
  }
  SECTION("two points reduce to the two-point formula") {
    for (double kappa : {1.0, 0.0, -2.0}) {
      const mg::CircleParams params(3.0, kappa);
      const double d = mg::kappa_distance(params, 1.5);
      REQUIRE(mg::circle_points_magnitude(params, 2) ==
              Approx(2.0 / (1.0 + std::exp(-d))).epsilon(1e-14));
    }
  }
  SECTION("agrees with the dense-matrix route") {
    const mg::CircleParams params(5.0, -1.0);
    const auto space = mg::circle_points_space(params, 24);
    REQUIRE(mg::circle_points_magnitude(params, 24) ==
            Approx(mg::magnitude(space).value).epsilon(1e-11));
  }
}

TEST_CASE("circle_magnitude integral") {
  SECTION("short circles have magnitude near one") {
    REQUIRE(mg::circle_magnitude(mg::CircleParams(1e-9, 0.0)) == Approx(1.0).margin(1e-8));
  }
  SECTION("intrinsic metric collapses to the closed form") {
    for (double length : {0.5, 5.0, 50.0})
      REQUIRE(mg::circle_magnitude(mg::CircleParams(length, 1.0)) ==
              Approx(mg::intrinsic_circle_magnitude(length)).epsilon(1e-10));
  }
  SECTION("chord metric at length 100, against the asymptotic value") {
    const double v = mg::circle_magnitude(mg::CircleParams(100.0, 0.0));
    REQUIRE(v == Approx(49.9502517975).margin(1e-8));  // frozen from a 2^20-panel oracle
    REQUIRE(std::abs(v - (50.0 - pi * pi / 200.0)) < 1e-2);
  }
  SECTION("agrees with a brute-force Simpson oracle") {
    for (double kappa : {0.0, -4.0}) {
      auto f = [kappa](double s) {
        return std::exp(-9.0 * mg::detail::unit_kappa_distance(kappa, s));
      };
      const double integral = oracles::simpson(f, 0.0, 1.0, 1 << 16);
      REQUIRE(mg::circle_magnitude(mg::CircleParams(9.0, kappa)) ==
              Approx(1.0 / integral).epsilon(1e-10));
    }
  }
  SECTION("long chord circles approach half the length") {
    REQUIRE(std::abs(mg::circle_magnitude(mg::CircleParams(200.0, 0.0)) - 100.0) < 0.03);
  }
}

TEST_CASE("intrinsic_circle_magnitude closed form") {
  REQUIRE(mg::intrinsic_circle_magnitude(2.0) ==
          Approx(1.0 / (1.0 - std::exp(-1.0))).epsilon(1e-15));
  REQUIRE(mg::intrinsic_circle_magnitude(2.0) == Approx(1.58198).margin(1e-5));
  SECTION("length 50 is 25 up to an exponentially small excess") {
    const double v = mg::intrinsic_circle_magnitude(50.0);
    REQUIRE(v == Approx(25.0 + 25.0 / (std::exp(25.0) - 1.0)).epsilon(1e-15));
    REQUIRE(std::abs(v - 25.0) < 4e-10);
  }
  SECTION("short-length limit is one") {
    REQUIRE(mg::intrinsic_circle_magnitude(1e-12) == Approx(1.0).margin(1e-9));
  }
  REQUIRE_THROWS_AS(mg::intrinsic_circle_magnitude(0.0), std::invalid_argument);
}

TEST_CASE("circle_asymptotic") {
  REQUIRE(mg::circle_asymptotic(mg::CircleParams(9.0, 1.0)) == 4.5);
  REQUIRE(mg::circle_asymptotic(mg::CircleParams(10.0, 0.0)) ==
          Approx(5.0 - pi * pi / 20.0).epsilon(1e-15));
  REQUIRE(mg::circle_asymptotic(mg::CircleParams(10.0, -3.0)) ==
          Approx(5.0 - pi * pi / 5.0).epsilon(1e-15));
  SECTION("scaled residual decreases with the length") {
    for (double kappa : {0.0, -10.0}) {
      double prev = std::numeric_limits<double>::infinity();
      for (double length : {20.0, 40.0, 80.0}) {
        const mg::CircleParams params(length, kappa);
        const double r =
            length * std::abs(mg::circle_magnitude(params) - mg::circle_asymptotic(params));
        REQUIRE(r < prev);
        prev = r;
      }
    }
  }
}

TEST_CASE("circle_convergence") {
  SECTION("chord-metric errors decay monotonically") {
    const std::vector<int> ns = {8, 16, 32, 64, 128, 256, 512, 1024};
    const auto report = mg::circle_convergence(mg::CircleParams(5.0, 0.0), ns);
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& e : report.entries) {
      REQUIRE(e.error < prev);
      prev = e.error;
    }
  }
  SECTION("intrinsic metric converges to the closed form") {
    const auto report =
        mg::circle_convergence(mg::CircleParams(5.0, 1.0), std::vector<int>{4096});
    REQUIRE(report.entries.front().value ==
            Approx(mg::intrinsic_circle_magnitude(5.0)).margin(1e-6));
  }
  SECTION("the n=2 entry is the two-point formula") {
    const mg::CircleParams params(3.0, 0.0);
    const auto report = mg::circle_convergence(params, std::vector<int>{2});
    const double d = mg::kappa_distance(params, 1.5);
    REQUIRE(report.entries.front().value ==
            Approx(2.0 / (1.0 + std::exp(-d))).epsilon(1e-14));
  }
  SECTION("list preconditions") {
    const mg::CircleParams params(1.0, 0.0);
    REQUIRE_THROWS_AS(mg::circle_convergence(params, std::vector<int>{4, 4}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(mg::circle_convergence(params, std::vector<int>{1}),
                      std::invalid_argument);
  }
}

TEST_CASE("zero-length slope probe") {
  // the chord-metric slope lands on 2/pi^2; no closed form is asserted beyond
  // the numeric probe
  REQUIRE(mg::circle_zero_slope_probe(0.0) == Approx(2.0 / (pi * pi)).margin(1e-4));
}
