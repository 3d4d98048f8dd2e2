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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "magnitude/cantor.hpp"
#include "magnitude/circle.hpp"
#include "magnitude/json_io.hpp"
#include "magnitude/linear_spaces.hpp"
#include "magnitude/magnitude.hpp"
#include "magnitude/verify.hpp"

namespace {

namespace mg = magnitude;

/// 17 significant digits: round-trip safe for doubles and byte-deterministic.
std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void emit(const std::string& output_path, const std::string& content) {
  if (output_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(output_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + output_path);
  f << content;
}

struct GridSpec {
  double from = 0.0;
  double to = 0.0;
  int steps = 0;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec g;
  char colon1 = 0, colon2 = 0;
  std::istringstream in(text);
  if (!(in >> g.from >> colon1 >> g.to >> colon2 >> g.steps) || colon1 != ':' ||
      colon2 != ':' || g.steps < 1)
    throw CLI::ValidationError("grid", "expected from:to:steps with steps >= 1");
  if (g.steps > 1 && !(g.to > g.from))
    throw CLI::ValidationError("grid", "upper bound must exceed lower bound");
  return g;
}

std::vector<double> make_grid(const GridSpec& g, bool log_spaced) {
  std::vector<double> out;
  out.reserve(g.steps);
  if (g.steps == 1) {
    out.push_back(g.from);
    return out;
  }
  if (log_spaced && !(g.from > 0.0))
    throw CLI::ValidationError("grid", "log spacing needs a positive lower bound");
  for (int i = 0; i < g.steps; ++i) {
    const double u = static_cast<double>(i) / (g.steps - 1);
    out.push_back(log_spaced ? g.from * std::pow(g.to / g.from, u)
                             : g.from + (g.to - g.from) * u);
  }
  return out;
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open input file: " + path);
  return nlohmann::json::parse(f);
}

int report_error(const std::string& what) {
  nlohmann::json j{{"error", what}};
  std::cerr << j.dump(2) << "\n";
  return 1;
}

// ---------------------------------------------------------------------------

int run_finite(const std::string& file, const std::string& format,
               const std::string& output) {
  const mg::FiniteMetricSpace space = mg::space_from_json(load_json(file));
  const mg::ValidationReport report = mg::validate(space);
  if (!report.ok) {
    emit(output, mg::to_json(report).dump(2) + "\n");
    return 1;
  }
  const mg::MagnitudeResult result = mg::magnitude(space);
  if (format == "json") {
    emit(output, mg::to_json(result, space.labels()).dump(2) + "\n");
  } else {
    std::string csv = "label,weight\n";
    for (std::size_t i = 0; i < space.size(); ++i)
      csv += csv_field(space.labels()[i]) + "," + fmt17(result.weighting.weights[i]) + "\n";
    emit(output, csv);
    std::cerr << "magnitude " << fmt17(result.value) << "\n";
  }
  return 0;
}

int run_sweep(const std::string& file, const GridSpec& grid, bool log_spaced,
              const std::string& format, const std::string& output) {
  const mg::FiniteMetricSpace space = mg::space_from_json(load_json(file));
  const mg::ValidationReport report = mg::validate(space);
  if (!report.ok) {
    emit(output, mg::to_json(report).dump(2) + "\n");
    return 1;
  }
  const std::vector<double> ts = make_grid(grid, log_spaced);
  const auto points = mg::magnitude_function(space, ts);
  const double n = static_cast<double>(space.size());
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& p : points) {
      nlohmann::json row{{"t", p.t}, {"points", space.size()}};
      if (p.value) {
        row["value"] = *p.value;
        row["error"] = std::abs(*p.value - n);
      } else {
        row["value"] = nullptr;
        row["error"] = nullptr;
      }
      rows.push_back(row);
    }
    emit(output, rows.dump(2) + "\n");
  } else {
    std::string csv = "t,value,reference,error\n";
    for (const auto& p : points) {
      csv += fmt17(p.t) + ",";
      if (p.value)
        csv += fmt17(*p.value) + "," + fmt17(n) + "," + fmt17(std::abs(*p.value - n));
      else
        csv += "undefined," + fmt17(n) + ",undefined";
      csv += "\n";
    }
    emit(output, csv);
  }
  return 0;
}

int run_segment(double length, const std::vector<int>& n_list,
                const std::string& scheme_name, unsigned seed,
                const std::string& format, const std::string& output) {
  const double closed = mg::segment_magnitude(length);
  mg::GapScheme scheme = mg::GapScheme::uniform;
  if (scheme_name == "random") scheme = mg::GapScheme::random;
  else if (scheme_name == "geometric") scheme = mg::GapScheme::geometric;

  std::vector<mg::SegmentConvergenceEntry> table;
  if (length > 0.0)
    table = mg::segment_convergence({length, scheme, 2, seed}, n_list);

  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : table)
      rows.push_back({{"n", e.points}, {"value", e.value}, {"error", e.error}});
    nlohmann::json out{{"length", length},
                       {"segment_magnitude", closed},
                       {"scheme", scheme_name},
                       {"entries", rows}};
    emit(output, out.dump(2) + "\n");
  } else {
    std::string csv = "n,value,reference,error\n";
    for (const auto& e : table)
      csv += std::to_string(e.points) + "," + fmt17(e.value) + "," + fmt17(closed) +
             "," + fmt17(e.error) + "\n";
    emit(output, csv);
    std::cerr << "segment magnitude " << fmt17(closed) << "\n";
  }
  return 0;
}

int run_cantor(double length, int level, double eps, bool fourier, int samples,
               int harmonics, std::optional<GridSpec> l_grid, const std::string& format,
               const std::string& output) {
  if (fourier) {
    const mg::FourierReport report = mg::cantor_fourier(samples, harmonics, eps);
    if (format == "json") {
      emit(output, mg::to_json(report).dump(2) + "\n");
    } else {
      std::string csv = "harmonic,amplitude,phase\n";
      csv += "0," + fmt17(report.mean) + ",0\n";
      for (const auto& h : report.harmonics)
        csv += std::to_string(h.frequency) + "," + fmt17(h.amplitude) + "," +
               fmt17(h.phase) + "\n";
      emit(output, csv);
    }
    return 0;
  }

  std::vector<double> lengths;
  if (l_grid)
    lengths = make_grid(*l_grid, false);
  else
    lengths.push_back(length);

  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (double l : lengths) {
      const mg::CantorParams p(l, eps);
      rows.push_back({{"length", l},
                      {"k", level},
                      {"approx", mg::cantor_approx_magnitude(l, level)},
                      {"limit", mg::cantor_magnitude(p)},
                      {"p", mg::cantor_p(p)},
                      {"q2", mg::cantor_q2(p)},
                      {"f", mg::cantor_f(l, eps)}});
    }
    emit(output, (rows.size() == 1 ? rows.front() : rows).dump(2) + "\n");
  } else {
    std::string csv = "l,approx,limit,p\n";
    for (double l : lengths) {
      const mg::CantorParams p(l, eps);
      csv += fmt17(l) + "," + fmt17(mg::cantor_approx_magnitude(l, level)) + "," +
             fmt17(mg::cantor_magnitude(p)) + "," + fmt17(mg::cantor_p(p)) + "\n";
    }
    emit(output, csv);
  }
  return 0;
}

int run_circle(double length, double kappa, const std::vector<int>& n_list,
               std::optional<GridSpec> l_grid, double tol, bool zero_slope,
               const std::string& format, const std::string& output) {
  mg::Quadrature quad;
  quad.tol = tol;

  if (!n_list.empty()) {
    const mg::CircleParams params(length, kappa);
    const mg::ConvergenceReport report = mg::circle_convergence(params, n_list, quad);
    if (format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& e : report.entries)
        rows.push_back({{"n", e.points}, {"value", e.value}, {"error", e.error}});
      nlohmann::json out{{"length", length},
                         {"kappa", kappa},
                         {"limit", report.limit},
                         {"entries", rows}};
      emit(output, out.dump(2) + "\n");
    } else {
      std::string csv = "n,value,reference,error\n";
      for (const auto& e : report.entries)
        csv += std::to_string(e.points) + "," + fmt17(e.value) + "," +
               fmt17(report.limit) + "," + fmt17(e.error) + "\n";
      emit(output, csv);
    }
    return 0;
  }

  std::vector<double> lengths;
  if (l_grid)
    lengths = make_grid(*l_grid, false);
  else
    lengths.push_back(length);

  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (double l : lengths) {
      const mg::CircleParams params(l, kappa);
      nlohmann::json row{{"length", l},
                         {"kappa", kappa},
                         {"magnitude", mg::circle_magnitude(params, quad)},
                         {"half_length", l / 2.0},
                         {"asymptote", mg::circle_asymptotic(params)}};
      if (kappa == 1.0) row["intrinsic_closed_form"] = mg::intrinsic_circle_magnitude(l);
      rows.push_back(row);
    }
    nlohmann::json out = rows.size() == 1 ? rows.front() : rows;
    if (zero_slope) {
      nlohmann::json wrapped{{"result", out},
                             {"zero_slope_probe", mg::circle_zero_slope_probe(kappa)}};
      emit(output, wrapped.dump(2) + "\n");
    } else {
      emit(output, out.dump(2) + "\n");
    }
  } else {
    std::string csv = "l,value,half_length,asymptote\n";
    for (double l : lengths) {
      const mg::CircleParams params(l, kappa);
      csv += fmt17(l) + "," + fmt17(mg::circle_magnitude(params, quad)) + "," +
             fmt17(l / 2.0) + "," + fmt17(mg::circle_asymptotic(params)) + "\n";
    }
    emit(output, csv);
    if (zero_slope)
      std::cerr << "zero slope probe " << fmt17(mg::circle_zero_slope_probe(kappa)) << "\n";
  }
  return 0;
}

int run_verify() {
  const auto results = mg::verify::run_all();
  bool all_ok = true;
  for (const auto& r : results) {
    std::printf("%s %2d  %-48s %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str());
    all_ok = all_ok && r.passed;
  }
  std::printf("%s\n", all_ok ? "all criteria passed" : "some criteria FAILED");
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"magnitude of finite metric spaces, segments, Cantor sets and circles"};
  app.require_subcommand(1);

  std::string input_file, output_path, format = "csv", t_spec, l_spec, scheme = "uniform";
  bool log_spaced = true, fourier = false, zero_slope = false;
  double length = 1.0, kappa = 0.0, eps = 1e-12, tol = 1e-12;
  int level = 10, samples = 1024, harmonics = 8;
  unsigned seed = 42;
  std::vector<int> n_list;

  auto* finite = app.add_subcommand("finite", "magnitude and weighting of a space file");
  finite->add_option("file", input_file, "JSON input ({\"points\":...} or {\"distances\":...})")
      ->required();
  finite->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  finite->add_option("--output", output_path, "output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "magnitude function over a scale grid");
  sweep->add_option("file", input_file, "JSON input")->required();
  sweep->add_option("--t", t_spec, "grid from:to:steps")->required();
  sweep->add_flag("--log,!--linear", log_spaced, "log-spaced grid (default)");
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--output", output_path);

  auto* segment = app.add_subcommand("segment", "segment closed form and convergence");
  segment->add_option("--length", length, "segment length")->required();
  segment->add_option("--n-list", n_list, "point counts (default 10,100,1000)")
      ->delimiter(',');
  segment->add_option("--scheme", scheme, "uniform, random or geometric")
      ->check(CLI::IsMember({"uniform", "random", "geometric"}));
  segment->add_option("--seed", seed, "seed for the random scheme");
  segment->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  segment->add_option("--output", output_path);

  auto* cantor = app.add_subcommand("cantor", "middle-thirds approximations and limit");
  cantor->add_option("--length", length, "total length")->required();
  cantor->add_option("--k", level, "approximation level (default 10)")
      ->check(CLI::Range(0, 62));
  cantor->add_option("--eps", eps, "series truncation tolerance")
      ->check(CLI::PositiveNumber);
  cantor->add_flag("--fourier", fourier, "emit the fourier report instead");
  cantor->add_option("--samples", samples, "fourier sample count (power of two)");
  cantor->add_option("--harmonics", harmonics, "number of harmonics");
  cantor->add_option("--l-grid", l_spec, "length grid from:to:steps");
  cantor->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  cantor->add_option("--output", output_path);

  auto* circle = app.add_subcommand("circle", "circle magnitudes under the kappa metric");
  circle->add_option("--length", length, "circumference")->required();
  circle->add_option("--kappa", kappa, "relative curvature, at most 1")->required();
  circle->add_option("--n-list", n_list, "emit the convergence table for these n")
      ->delimiter(',');
  circle->add_option("--l-grid", l_spec, "length grid from:to:steps");
  circle->add_option("--tol", tol, "quadrature tolerance")->check(CLI::PositiveNumber);
  circle->add_flag("--zero-slope", zero_slope, "report the slope probe at length 0");
  circle->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  circle->add_option("--output", output_path);

  auto* verify = app.add_subcommand("verify", "run the built-in verification suite");
  (void)verify;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(finite)) {
      if (!finite->count("--format")) format = "json";
      return run_finite(input_file, format, output_path);
    }
    if (app.got_subcommand(sweep))
      return run_sweep(input_file, parse_grid(t_spec), log_spaced, format, output_path);
    if (app.got_subcommand(segment)) {
      if (n_list.empty()) n_list = {10, 100, 1000};
      return run_segment(length, n_list, scheme, seed, format, output_path);
    }
    if (app.got_subcommand(cantor)) {
      std::optional<GridSpec> grid;
      if (cantor->count("--l-grid")) grid = parse_grid(l_spec);
      return run_cantor(length, level, eps, fourier, samples, harmonics, grid, format,
                        output_path);
    }
    if (app.got_subcommand(circle)) {
      std::optional<GridSpec> grid;
      if (circle->count("--l-grid")) grid = parse_grid(l_spec);
      return run_circle(length, kappa, n_list, grid, tol, zero_slope, format, output_path);
    }
    if (app.got_subcommand(verify)) return run_verify();
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    return report_error(e.what());
  }
  return 2;
}
