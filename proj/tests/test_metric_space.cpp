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

#include <random>

#include "magnitude/metric_space.hpp"

namespace mg = magnitude;

TEST_CASE("from_points builds the Euclidean subspace metric") {
  SECTION("two points on a line") {
    const auto space = mg::from_points({{0.0}, {1.0}});
    REQUIRE(space.size() == 2);
    REQUIRE(space.distance(0, 1) == 1.0);
    REQUIRE(space.distance(0, 0) == 0.0);
  }
  SECTION("3-4-5 triangle distance") {
    const auto space = mg::from_points({{0.0, 0.0}, {3.0, 4.0}});
    REQUIRE(space.distance(0, 1) == 5.0);
  }
  SECTION("coincident points are rejected") {
    REQUIRE_THROWS_AS(mg::from_points({{0.0}, {0.0}}), mg::DuplicatePoint);
  }
  SECTION("mixed dimensions are rejected") {
    REQUIRE_THROWS_AS(mg::from_points({{0.0}, {0.0, 1.0}}), mg::DimensionMismatch);
    REQUIRE_THROWS_AS(mg::from_points({{}, {}}), mg::DimensionMismatch);
  }
  SECTION("default labels") {
    const auto space = mg::from_points({{0.0}, {2.0}, {5.0}});
    REQUIRE(space.labels() == std::vector<std::string>{"0", "1", "2"});
  }
}

TEST_CASE("validate reports every axiom violation") {
  SECTION("a clean two-point space passes") {
    const auto report = mg::validate(mg::from_points({{0.0}, {1.0}}));
    REQUIRE(report.ok);
    REQUIRE(report.violations.empty());
  }
  SECTION("triangle violation at d13 = 5 with unit legs") {
    mg::Matrix d(3, 3);
    d(0, 1) = d(1, 0) = 1.0;
    d(1, 2) = d(2, 1) = 1.0;
    d(0, 2) = d(2, 0) = 5.0;
    const auto report = mg::validate(mg::FiniteMetricSpace(d));
    REQUIRE_FALSE(report.ok);
    bool found = false;
    for (const auto& v : report.violations)
      if (v.kind == mg::ViolationKind::triangle) {
        found = true;
        REQUIRE(v.magnitude == Approx(3.0));
      }
    REQUIRE(found);
  }
  SECTION("nonzero diagonal") {
    mg::Matrix d(2, 2);
    d(0, 0) = 0.1;
    d(0, 1) = d(1, 0) = 1.0;
    const auto report = mg::validate(mg::FiniteMetricSpace(d));
    REQUIRE_FALSE(report.ok);
    REQUIRE(report.violations.size() == 1);
    REQUIRE(report.violations.front().kind == mg::ViolationKind::nonzero_diagonal);
  }
  SECTION("asymmetric entries and vanishing off-diagonals") {
    mg::Matrix d(2, 2);
    d(0, 1) = 1.0;
    d(1, 0) = 2.0;
    auto report = mg::validate(mg::FiniteMetricSpace(d));
    REQUIRE_FALSE(report.ok);
    REQUIRE(report.violations.front().kind == mg::ViolationKind::asymmetry);

    mg::Matrix z(2, 2);  // off-diagonal zero: separation fails
    auto report2 = mg::validate(mg::FiniteMetricSpace(z));
    REQUIRE_FALSE(report2.ok);
    REQUIRE(report2.violations.front().kind == mg::ViolationKind::zero_offdiagonal);
  }
  SECTION("ok is equivalent to an empty violation list") {
    const auto good = mg::validate(mg::from_points({{0.0}, {1.5}, {4.0}}));
    REQUIRE(good.ok == good.violations.empty());
  }
}

TEST_CASE("scale multiplies distances and keeps labels") {
  const auto space = mg::from_points({{0.0}, {1.0}});
  SECTION("two-point by three") {
    REQUIRE(mg::scale(space, 3.0).distance(0, 1) == 3.0);
  }
  SECTION("identity scaling is bitwise identical") {
    const auto same = mg::scale(space, 1.0);
    REQUIRE(same.distance(0, 1) == space.distance(0, 1));
    REQUIRE(same.labels() == space.labels());
  }
  SECTION("3-4-5 cloud doubled") {
    const auto tri = mg::from_points({{0.0, 0.0}, {3.0, 0.0}, {3.0, 4.0}});
    const auto big = mg::scale(tri, 2.0);
    REQUIRE(big.distance(0, 1) == 6.0);
    REQUIRE(big.distance(1, 2) == 8.0);
    REQUIRE(big.distance(0, 2) == 10.0);
  }
  SECTION("nonpositive factors are rejected") {
    REQUIRE_THROWS_AS(mg::scale(space, 0.0), mg::NonpositiveScale);
    REQUIRE_THROWS_AS(mg::scale(space, -2.0), mg::NonpositiveScale);
  }
}

TEST_CASE("metric space properties on random clouds") {
  std::mt19937 rng(7101);
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  std::uniform_real_distribution<double> factor(0.1, 8.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 9;
    const int m = 1 + trial % 3;
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < n; ++i) {
      std::vector<double> p(m);
      for (double& c : p) c = coord(rng);
      pts.push_back(std::move(p));
    }
    mg::FiniteMetricSpace space;
    try {
      space = mg::from_points(pts);
    } catch (const mg::DuplicatePoint&) {
      continue;  // measure-zero collision, skip
    }

    REQUIRE(mg::validate(space).ok);

    const double s = factor(rng), t = factor(rng);
    const auto twice = mg::scale(mg::scale(space, s), t);
    const auto once = mg::scale(space, s * t);
    for (std::size_t i = 0; i < space.size(); ++i)
      for (std::size_t j = 0; j < space.size(); ++j)
        REQUIRE(twice.distance(i, j) ==
                Approx(once.distance(i, j)).epsilon(1e-14).margin(0.0));

    // min is attained at the same pair, so scaling it commutes exactly
    REQUIRE(mg::scale(space, t).min_offdiagonal() == t * space.min_offdiagonal());
  }
}

TEST_CASE("construction guards") {
  REQUIRE_THROWS_AS(mg::FiniteMetricSpace(mg::Matrix(2, 3)), mg::DimensionMismatch);
  REQUIRE_THROWS_AS(mg::FiniteMetricSpace(mg::Matrix(2, 2), {"a"}), mg::DimensionMismatch);
  const mg::FiniteMetricSpace labelled(mg::Matrix(2, 2), {"left", "right"});
  REQUIRE(labelled.labels().front() == "left");
}
