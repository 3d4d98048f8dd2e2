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

#include <string>
#include <vector>

#include <json.hpp>

#include "magnitude/cantor.hpp"
#include "magnitude/magnitude.hpp"
#include "magnitude/metric_space.hpp"

namespace magnitude {

/// Input schema: either {"points": [[x,...],...]} (Euclidean point cloud) or
/// {"distances": [[...],...], "labels": [...]?} (explicit matrix).  Axioms
/// are not checked here; callers validate() and reject with the report.
inline FiniteMetricSpace space_from_json(const nlohmann::json& j) {
  if (j.contains("points")) {
    std::vector<std::vector<double>> coords;
    for (const auto& row : j.at("points")) coords.push_back(row.get<std::vector<double>>());
    return from_points(coords);
  }
  if (j.contains("distances")) {
    const auto& rows = j.at("distances");
    const std::size_t n = rows.size();
    Matrix d(n, n);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n)
        throw DimensionMismatch("space_from_json: distance matrix must be square");
      for (std::size_t k = 0; k < n; ++k) d(i, k) = row.at(k).get<double>();
      ++i;
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return FiniteMetricSpace(std::move(d), std::move(labels));
  }
  throw std::invalid_argument(
      "space_from_json: expected a \"points\" or \"distances\" key");
}

inline nlohmann::json to_json(const ValidationReport& report) {
  nlohmann::json out;
  out["ok"] = report.ok;
  out["violations"] = nlohmann::json::array();
  for (const auto& v : report.violations) {
    out["violations"].push_back({{"kind", to_string(v.kind)},
                                 {"indices", v.indices},
                                 {"magnitude", v.magnitude}});
  }
  return out;
}

inline nlohmann::json to_json(const SolveDiagnostics& d) {
  return {{"method", d.method == SolveMethod::cholesky ? "cholesky" : "lu"},
          {"positive_definite", d.positive_definite},
          {"rcond_estimate", d.rcond_estimate}};
}

inline nlohmann::json to_json(const MagnitudeResult& r,
                              const std::vector<std::string>& labels) {
  return {{"magnitude", r.value},
          {"weights", r.weighting.weights},
          {"labels", labels},
          {"diagnostics", to_json(r.diagnostics)}};
}

inline nlohmann::json to_json(const FourierReport& r) {
  nlohmann::json harmonics = nlohmann::json::array();
  for (const auto& h : r.harmonics)
    harmonics.push_back(
        {{"frequency", h.frequency}, {"amplitude", h.amplitude}, {"phase", h.phase}});
  return {{"mean", r.mean}, {"harmonics", harmonics}};
}

}  // namespace magnitude
