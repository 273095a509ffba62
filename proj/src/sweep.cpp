/*
 * sweep.cpp
 *
 * This source file is part of the lorasg project
 *
 * Copyright 2026 The lorasg authors
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

#include "lorasg/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "lorasg/error.hpp"
#include "lorasg/metrics.hpp"
#include "lorasg/monte_carlo.hpp"

namespace lorasg {

namespace {

struct Row {
  std::string tag;
  std::size_t point = 0;
  double axis_value = 0.0;
  Method method = Method::GaussChebyshev;
  BoundSide side = BoundSide::Exact;
  double coverage = 0.0;
  double ase = 0.0;
  double ee = 0.0;
  std::optional<double> std_error;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

class PartialFile {
 public:
  explicit PartialFile(std::string final_path)
      : final_(std::move(final_path)), temp_(final_ + ".partial") {}
  ~PartialFile() {
    if (!committed_) {
      std::error_code ec;
      std::filesystem::remove(temp_, ec);
    }
  }
  void write(const std::string& content) {
    std::ofstream os(temp_, std::ios::binary | std::ios::trunc);
    if (!os) throw Error(ErrorCode::Io, "cannot open " + temp_ + " for writing");
    os << content;
    os.close();
    if (!os) throw Error(ErrorCode::Io, "failed writing " + temp_);
  }
  void commit() {
    std::error_code ec;
    std::filesystem::rename(temp_, final_, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot move output into place at " + final_ + ": " + ec.message());
    committed_ = true;
  }

 private:
  std::string final_;
  std::string temp_;
  bool committed_ = false;
};

ModelSettings model_at(const SweepDocument& doc, std::optional<double> series_value, double axis_value) {
  ModelSettings m = doc.model;
  if (series_value) set_model_value(m, doc.sweep.series_key, *series_value);
  set_model_value(m, doc.sweep.axis, axis_value);
  return m;
}

Row make_row(const ModelSettings& m, const CoverageResult& cov, std::optional<double> std_error) {
  const LinkParams p = resolve_link(m);
  Row row;
  row.method = cov.method;
  row.side = cov.bound_side;
  row.coverage = cov.value;
  row.ase = area_spectral_efficiency(m.nodes_per_cluster, p.receiver_density, cov.gamma_th, cov);
  row.ee = energy_efficiency(cov.gamma_th, p.typical_power_mw, cov);
  row.std_error = std_error;
  return row;
}

std::string summarize(const SweepDocument& doc, const std::vector<Row>& rows) {
  std::ostringstream out;
  // tag -> method -> per-point row
  std::map<std::string, std::map<Method, std::map<std::size_t, const Row*>>> index;
  std::vector<std::string> tags;
  for (const auto& r : rows) {
    if (!index.count(r.tag)) tags.push_back(r.tag);
    index[r.tag][r.method][r.point] = &r;
  }
  auto compare = [&](const std::string& tag, Method a, Method b) {
    const auto& by_method = index[tag];
    if (!by_method.count(a) || !by_method.count(b)) return;
    double worst = 0.0;
    double worst_se = 0.0;
    bool have_se = false;
    for (const auto& [point, ra] : by_method.at(a)) {
      const auto it = by_method.at(b).find(point);
      if (it == by_method.at(b).end()) continue;
      const double gap = std::abs(ra->coverage - it->second->coverage);
      worst = std::max(worst, gap);
      if (ra->std_error && *ra->std_error > 0.0) {
        have_se = true;
        worst_se = std::max(worst_se, gap / *ra->std_error);
      }
    }
    out << tag << ": max |" << to_string(a) << " - " << to_string(b) << "| = " << num(worst);
    if (have_se) out << " (" << num(worst_se) << " SE)";
    out << '\n';
  };
  for (const auto& tag : tags) {
    compare(tag, Method::GaussChebyshev, Method::ExactIntegral);
    if (index[tag].count(Method::GaussChebyshev))
      compare(tag, Method::MonteCarlo, Method::GaussChebyshev);
    else
      compare(tag, Method::MonteCarlo, Method::ExactIntegral);
  }
  if (doc.sweep.axis == "nodes_per_cluster") {
    for (const auto& tag : tags) {
      for (const auto& [method, points] : index[tag]) {
        const Row* best = nullptr;
        for (const auto& [point, r] : points)
          if (!best || r->ase > best->ase) best = r;
        if (best)
          out << tag << ": " << to_string(method) << " ASE peaks at nodes_per_cluster = "
              << num(best->axis_value) << " (" << num(best->ase) << " bit/s/Hz/m^2)\n";
      }
    }
  }
  return out.str();
}

}  // namespace

std::string csv_header(const std::string& axis) {
  return axis + ",scenario,method,bound_side,coverage,ase,ee,stderr,seed,T,M";
}

SweepOutcome run_sweep(const SweepDocument& doc, unsigned workers) {
  validate_document(doc);
  const SweepSpec& s = doc.sweep;
  const QuadratureSpec quad = make_quadrature(s.quadrature_inner, s.quadrature_outer);

  std::vector<std::optional<double>> series;
  if (s.series_key.empty())
    series.push_back(std::nullopt);
  else
    for (double v : s.series_values) series.push_back(v);

  std::vector<Row> rows;
  for (const auto& sv : series) {
    for (ScenarioKind kind : s.scenarios) {
      std::string tag = to_string(kind);
      if (sv) tag += "@" + s.series_key + "=" + num(*sv);
      for (Method method : s.methods) {
        if (method == Method::MonteCarlo && s.axis == "gamma_th_db") {
          // one run, every threshold shares the realizations
          const ModelSettings m = model_at(doc, sv, s.grid.front());
          SimSpec spec;
          spec.config = resolve_network(m);
          spec.scenario = make_scenario(kind, m);
          spec.trials = s.trials;
          spec.seed = s.seed;
          spec.workers = workers;
          for (double g : s.grid) spec.thresholds.push_back(db_to_linear(g));
          const auto estimates = estimate_coverage(spec);
          for (std::size_t i = 0; i < s.grid.size(); ++i) {
            const ModelSettings mi = model_at(doc, sv, s.grid[i]);
            Row row = make_row(mi, to_coverage_result(estimates[i], spec.thresholds[i]), estimates[i].std_error);
            row.tag = tag;
            row.point = i;
            row.axis_value = s.grid[i];
            rows.push_back(row);
          }
          continue;
        }
        for (std::size_t i = 0; i < s.grid.size(); ++i) {
          const ModelSettings m = model_at(doc, sv, s.grid[i]);
          const LinkParams p = resolve_link(m);
          const Scenario scenario = make_scenario(kind, m);
          const double gamma = db_to_linear(m.gamma_th_db);
          Row row;
          if (method == Method::ExactIntegral) {
            row = make_row(m, coverage_exact(gamma, scenario, p, s.integration_tol), std::nullopt);
          } else if (method == Method::GaussChebyshev) {
            row = make_row(m, coverage_gc(gamma, scenario, p, quad), std::nullopt);
          } else {
            SimSpec spec;
            spec.config = resolve_network(m);
            spec.scenario = scenario;
            spec.trials = s.trials;
            spec.seed = s.seed;
            spec.workers = workers;
            spec.thresholds = {gamma};
            const McEstimate est = estimate_coverage(spec).front();
            row = make_row(m, to_coverage_result(est, gamma), est.std_error);
          }
          row.tag = tag;
          row.point = i;
          row.axis_value = s.grid[i];
          rows.push_back(row);
        }
      }
    }
  }

  std::ostringstream csv;
  csv << csv_header(s.axis) << '\n';
  for (const auto& r : rows) {
    const bool mc = r.method == Method::MonteCarlo;
    const bool gc = r.method == Method::GaussChebyshev;
    csv << num(r.axis_value) << ',' << r.tag << ',' << to_string(r.method) << ','
        << to_string(r.side) << ',' << num(r.coverage) << ',' << num(r.ase) << ',' << num(r.ee)
        << ',' << (r.std_error ? num(*r.std_error) : "") << ','
        << (mc ? std::to_string(s.seed) : "") << ','
        << (gc ? std::to_string(s.quadrature_inner) : "") << ','
        << (gc ? std::to_string(s.quadrature_outer) : "") << '\n';
  }

  auto sidecar = nlohmann::json::parse(describe_document(doc));
  sidecar["rows"] = rows.size();
  sidecar["csv_header"] = csv_header(s.axis);

  SweepOutcome outcome;
  outcome.rows = rows.size();
  outcome.csv_path = s.output_path;
  outcome.sidecar_path = s.output_path + ".json";
  outcome.summary = summarize(doc, rows);

  PartialFile csv_file(outcome.csv_path);
  PartialFile json_file(outcome.sidecar_path);
  csv_file.write(csv.str());
  json_file.write(sidecar.dump(2) + "\n");
  csv_file.commit();
  json_file.commit();
  return outcome;
}

}  // namespace lorasg
