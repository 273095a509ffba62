/*
 * config.cpp
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

#include "lorasg/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "lorasg/error.hpp"
#include "lorasg/metrics.hpp"

namespace lorasg {

namespace {

[[noreturn]] void config_error(std::string_view key, const std::string& message) {
  throw Error(ErrorCode::Config, "key '" + std::string(key) + "': " + message);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

double parse_double(std::string_view key, std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value))
    config_error(key, "expected a finite number, got '" + std::string(text) + "'");
  return value;
}

std::uint64_t parse_count(std::string_view key, std::string_view text) {
  text = trim(text);
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end)
    config_error(key, "expected a non-negative integer, got '" + std::string(text) + "'");
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "on" || text == "1") return true;
  if (text == "false" || text == "off" || text == "0") return false;
  config_error(key, "expected true/false, got '" + std::string(text) + "'");
}

std::vector<double> parse_numeric_list(std::string_view key, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '[' && text.back() == ']')
    text = trim(text.substr(1, text.size() - 2));
  if (text.empty()) config_error(key, "empty list");
  if (text.find(':') != std::string_view::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) config_error(key, "range must read start:stop:step");
    const double start = parse_double(key, parts[0]);
    const double stop = parse_double(key, parts[1]);
    const double step = parse_double(key, parts[2]);
    if (!(step > 0.0) || stop < start) config_error(key, "range needs step > 0 and stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 100000) config_error(key, "range has too many points");
    std::vector<double> values(count);
    for (std::size_t i = 0; i < count; ++i) values[i] = start + static_cast<double>(i) * step;
    return values;
  }
  std::vector<double> values;
  for (auto item : split(text, ',')) values.push_back(parse_double(key, item));
  return values;
}

struct NumericKey {
  const char* name;
  double (*get)(const ModelSettings&);
  void (*set)(ModelSettings&, double);
};

const NumericKey kNumericKeys[] = {
    {"tx_power_dbm", [](const ModelSettings& m) { return m.tx_power_dbm; },
     [](ModelSettings& m, double v) { m.tx_power_dbm = v; }},
    {"typical_tx_power_dbm",
     [](const ModelSettings& m) { return m.typical_tx_power_dbm.value_or(m.tx_power_dbm); },
     [](ModelSettings& m, double v) { m.typical_tx_power_dbm = v; }},
    {"coexist_tx_power_dbm", [](const ModelSettings& m) { return m.coexist_tx_power_dbm; },
     [](ModelSettings& m, double v) { m.coexist_tx_power_dbm = v; }},
    {"path_loss_exponent", [](const ModelSettings& m) { return m.path_loss_exponent; },
     [](ModelSettings& m, double v) { m.path_loss_exponent = v; }},
    {"carrier_frequency_hz", [](const ModelSettings& m) { return m.carrier_frequency_hz; },
     [](ModelSettings& m, double v) { m.carrier_frequency_hz = v; }},
    {"path_loss_constant",
     [](const ModelSettings& m) {
       return m.path_loss_constant ? *m.path_loss_constant : free_space_eta(m.carrier_frequency_hz);
     },
     [](ModelSettings& m, double v) { m.path_loss_constant = v; }},
    {"bandwidth_hz", [](const ModelSettings& m) { return m.bandwidth_hz; },
     [](ModelSettings& m, double v) { m.bandwidth_hz = v; }},
    {"noise_dbm",
     [](const ModelSettings& m) {
       return m.noise_dbm ? *m.noise_dbm : mw_to_dbm(noise_power_mw(m.bandwidth_hz));
     },
     [](ModelSettings& m, double v) { m.noise_dbm = v; }},
    {"noise_enabled", [](const ModelSettings& m) { return m.noise_enabled ? 1.0 : 0.0; },
     [](ModelSettings& m, double v) { m.noise_enabled = v != 0.0; }},
    {"cluster_radius_m", [](const ModelSettings& m) { return m.cluster_radius_m; },
     [](ModelSettings& m, double v) { m.cluster_radius_m = v; }},
    {"receiver_density_per_m2", [](const ModelSettings& m) { return m.receiver_density_per_m2; },
     [](ModelSettings& m, double v) { m.receiver_density_per_m2 = v; }},
    {"coexist_density_per_m2", [](const ModelSettings& m) { return m.coexist_density_per_m2; },
     [](ModelSettings& m, double v) { m.coexist_density_per_m2 = v; }},
    {"nodes_per_cluster", [](const ModelSettings& m) { return m.nodes_per_cluster; },
     [](ModelSettings& m, double v) { m.nodes_per_cluster = v; }},
    {"gamma_th_db", [](const ModelSettings& m) { return m.gamma_th_db; },
     [](ModelSettings& m, double v) { m.gamma_th_db = v; }},
    {"ordered_rank", [](const ModelSettings& m) { return static_cast<double>(m.ordered_rank); },
     [](ModelSettings& m, double v) {
       if (v < 0.0 || v != std::floor(v) || v > 1e6)
         config_error("ordered_rank", "expected a non-negative integer");
       m.ordered_rank = static_cast<int>(v);
     }},
    {"window_radius_m", [](const ModelSettings& m) { return m.window_radius_m; },
     [](ModelSettings& m, double v) { m.window_radius_m = v; }},
};

const NumericKey* find_numeric(std::string_view key) {
  for (const auto& k : kNumericKeys)
    if (key == k.name) return &k;
  return nullptr;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

double default_density_per_m2() { return 0.1 / (500.0 * 500.0 * std::numbers::pi); }

ModelSettings::ModelSettings()
    : receiver_density_per_m2(default_density_per_m2()),
      coexist_density_per_m2(default_density_per_m2()) {}

const char* to_string(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::UnorderedFixed: return "unordered-fixed";
    case ScenarioKind::UnorderedRandom: return "unordered-random";
    case ScenarioKind::OrderedFixed: return "ordered-fixed";
    case ScenarioKind::OrderedRandom: return "ordered-random";
  }
  return "unknown";
}

ScenarioKind parse_scenario_kind(std::string_view text) {
  for (auto kind : {ScenarioKind::UnorderedFixed, ScenarioKind::UnorderedRandom,
                    ScenarioKind::OrderedFixed, ScenarioKind::OrderedRandom})
    if (text == to_string(kind)) return kind;
  config_error("scenarios", "unknown scenario '" + std::string(text) + "'");
}

Method parse_method(std::string_view text) {
  if (text == "exact") return Method::ExactIntegral;
  if (text == "gc") return Method::GaussChebyshev;
  if (text == "mc") return Method::MonteCarlo;
  config_error("methods", "unknown method '" + std::string(text) + "' (exact, gc, mc)");
}

bool is_numeric_model_key(std::string_view key) { return find_numeric(key) != nullptr; }

void set_model_value(ModelSettings& model, std::string_view key, double value) {
  const NumericKey* k = find_numeric(key);
  if (!k) config_error(key, "not a numeric model key");
  k->set(model, value);
}

double get_model_value(const ModelSettings& model, std::string_view key) {
  const NumericKey* k = find_numeric(key);
  if (!k) config_error(key, "not a numeric model key");
  return k->get(model);
}

std::vector<std::string> preset_names() {
  return {"custom", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7"};
}

SweepDocument preset_document(std::string_view name) {
  using SK = ScenarioKind;
  const std::vector<SK> all = {SK::UnorderedFixed, SK::UnorderedRandom, SK::OrderedFixed,
                               SK::OrderedRandom};
  const std::vector<SK> ordered = {SK::OrderedFixed, SK::OrderedRandom};
  const double base = default_density_per_m2();

  SweepDocument doc;
  SweepSpec& s = doc.sweep;
  s.preset = std::string(name);
  s.methods = {Method::GaussChebyshev, Method::MonteCarlo};
  s.scenarios = all;
  if (name == "custom" || name == "fig2") {
    s.axis = "gamma_th_db";
    s.grid = parse_numeric_list("grid", "-20:10:2");
    if (name == "fig2") s.methods = {Method::ExactIntegral, Method::GaussChebyshev, Method::MonteCarlo};
  } else if (name == "fig3") {
    s.axis = "nodes_per_cluster";
    s.grid = parse_numeric_list("grid", "1:10:1");
    s.series_key = "cluster_radius_m";
    s.series_values = {100.0, 500.0, 1000.0};
  } else if (name == "fig4") {
    s.axis = "receiver_density_per_m2";
    for (double f : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) s.grid.push_back(f * base);
    s.series_key = "coexist_density_per_m2";
    s.series_values = {0.0, base, 10.0 * base};
    s.scenarios = ordered;
  } else if (name == "fig5") {
    s.axis = "nodes_per_cluster";
    s.grid = parse_numeric_list("grid", "1:30:1");
    s.series_key = "cluster_radius_m";
    s.series_values = {200.0, 500.0};
    s.methods = {Method::GaussChebyshev};
  } else if (name == "fig6") {
    s.axis = "cluster_radius_m";
    s.grid = parse_numeric_list("grid", "100:1000:100");
    s.series_key = "tx_power_dbm";
    s.series_values = {0.0, 7.0, 14.0};
    s.scenarios = ordered;
    s.methods = {Method::GaussChebyshev};
  } else if (name == "fig7") {
    s.axis = "nodes_per_cluster";
    s.grid = parse_numeric_list("grid", "1:10:1");
    s.series_key = "noise_enabled";
    s.series_values = {1.0, 0.0};
    s.scenarios = ordered;
    doc.model.cluster_radius_m = 1000.0;
    doc.model.tx_power_dbm = 7.0;
  } else {
    throw Error(ErrorCode::Config, "unknown preset '" + std::string(name) + "'");
  }
  s.output_path = s.preset + ".csv";
  return doc;
}

void apply_setting(SweepDocument& doc, std::string_view key, std::string_view value) {
  value = trim(value);
  SweepSpec& s = doc.sweep;
  if (key == "preset") {
    doc = preset_document(value);
    return;
  }
  if (key == "noise_enabled") {
    doc.model.noise_enabled = parse_bool(key, value);
    return;
  }
  if (const NumericKey* k = find_numeric(key)) {
    k->set(doc.model, parse_double(key, value));
    return;
  }
  if (key == "typical_cluster") {
    if (value == "shifted") doc.model.typical_cluster = TypicalClusterRule::Shifted;
    else if (value == "conditioned") doc.model.typical_cluster = TypicalClusterRule::Conditioned;
    else config_error(key, "expected shifted or conditioned");
  } else if (key == "interference") {
    if (value == "full") doc.model.interference = Interference::Full;
    else if (value == "intra_limited") doc.model.interference = Interference::IntraLimited;
    else config_error(key, "expected full or intra_limited");
  } else if (key == "axis") {
    if (!is_numeric_model_key(value)) config_error(key, "'" + std::string(value) + "' is not a numeric model key");
    s.axis = std::string(value);
  } else if (key == "grid") {
    s.grid = parse_numeric_list(key, value);
  } else if (key == "series") {
    // series = key: v1, v2, ...   (empty value clears it)
    if (value.empty() || value == "none") {
      s.series_key.clear();
      s.series_values.clear();
      return;
    }
    const auto colon = value.find(':');
    if (colon == std::string_view::npos) config_error(key, "expected 'model_key: v1, v2, ...'");
    const auto series_key = trim(value.substr(0, colon));
    if (!is_numeric_model_key(series_key))
      config_error(key, "'" + std::string(series_key) + "' is not a numeric model key");
    s.series_key = std::string(series_key);
    s.series_values = parse_numeric_list(key, value.substr(colon + 1));
  } else if (key == "scenarios") {
    s.scenarios.clear();
    for (auto item : split(value, ',')) s.scenarios.push_back(parse_scenario_kind(item));
  } else if (key == "methods") {
    s.methods.clear();
    for (auto item : split(value, ',')) s.methods.push_back(parse_method(item));
  } else if (key == "trials") {
    s.trials = parse_count(key, value);
  } else if (key == "seed") {
    s.seed = parse_count(key, value);
  } else if (key == "quadrature_inner") {
    s.quadrature_inner = static_cast<int>(std::min<std::uint64_t>(parse_count(key, value), 1u << 30));
  } else if (key == "quadrature_outer") {
    s.quadrature_outer = static_cast<int>(std::min<std::uint64_t>(parse_count(key, value), 1u << 30));
  } else if (key == "integration_tol") {
    s.integration_tol = parse_double(key, value);
  } else if (key == "output") {
    if (value.empty()) config_error(key, "empty output path");
    s.output_path = std::string(value);
  } else {
    config_error(key, "unknown key");
  }
}

SweepDocument parse_config(std::string_view text) {
  struct Entry {
    int line;
    std::string key;
    std::string value;
  };
  std::vector<Entry> entries;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorCode::Config, "line " + std::to_string(line_no) + ": expected 'key = value'");
    entries.push_back({line_no, std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1)))});
  }

  SweepDocument doc = preset_document("custom");
  auto apply = [&](const Entry& e) {
    try {
      apply_setting(doc, e.key, e.value);
    } catch (const Error& err) {
      throw Error(err.code(), "line " + std::to_string(e.line) + ": " + err.what());
    }
  };
  // the preset is the base layer no matter where it appears
  int presets = 0;
  for (const auto& e : entries)
    if (e.key == "preset") {
      if (++presets > 1) throw Error(ErrorCode::Config, "line " + std::to_string(e.line) + ": preset given twice");
      apply(e);
    }
  for (const auto& e : entries)
    if (e.key != "preset") apply(e);
  return doc;
}

SweepDocument load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_config(buffer.str());
  } catch (const Error& err) {
    throw Error(err.code(), path.string() + ": " + err.what());
  }
}

LinkParams resolve_link(const ModelSettings& m) {
  LinkParams p;
  p.interferer_power_mw = dbm_to_mw(m.tx_power_dbm);
  p.typical_power_mw = dbm_to_mw(m.typical_tx_power_dbm.value_or(m.tx_power_dbm));
  p.coexist_power_mw = dbm_to_mw(m.coexist_tx_power_dbm);
  p.alpha = m.path_loss_exponent;
  p.eta = m.path_loss_constant ? *m.path_loss_constant : free_space_eta(m.carrier_frequency_hz);
  p.cluster_radius = m.cluster_radius_m;
  p.receiver_density = m.receiver_density_per_m2;
  p.coexist_density = m.coexist_density_per_m2;
  if (m.noise_enabled)
    p.noise_mw = m.noise_dbm ? dbm_to_mw(*m.noise_dbm) : noise_power_mw(m.bandwidth_hz);
  return p;
}

NetworkConfig resolve_network(const ModelSettings& m) {
  NetworkConfig c;
  c.link = resolve_link(m);
  c.window_radius = m.window_radius_m;
  c.typical_rule = m.typical_cluster;
  return c;
}

Scenario make_scenario(ScenarioKind kind, const ModelSettings& m) {
  Scenario s;
  s.interference = m.interference;
  const bool ordered = kind == ScenarioKind::OrderedFixed || kind == ScenarioKind::OrderedRandom;
  const bool random = kind == ScenarioKind::UnorderedRandom || kind == ScenarioKind::OrderedRandom;
  if (!ordered)
    s.ordering = Unordered{};
  else if (m.ordered_rank == 0)
    s.ordering = Farthest{};
  else
    s.ordering = OrderedRank{m.ordered_rank};
  if (random)
    s.size = PoissonSize{m.nodes_per_cluster};
  else
    s.size = FixedSize{static_cast<int>(std::lround(m.nodes_per_cluster))};
  return s;
}

namespace {

void check_model(const ModelSettings& m, const std::string& where) {
  if (!(m.path_loss_exponent > 2.0))
    config_error("path_loss_exponent", "must exceed 2 so that delta = 2/alpha lies in (0, 1)" + where);
  try {
    resolve_link(m).validate();
  } catch (const Error& err) {
    throw Error(ErrorCode::Config, std::string("invalid model") + where + ": " + err.what());
  }
  if (!(m.window_radius_m > m.cluster_radius_m))
    config_error("window_radius_m", "must exceed cluster_radius_m" + where);
  if (!(m.nodes_per_cluster >= 1.0)) config_error("nodes_per_cluster", "must be >= 1" + where);
}

}  // namespace

void validate_model(const ModelSettings& model) { check_model(model, ""); }

void validate_document(const SweepDocument& doc) {
  const SweepSpec& s = doc.sweep;
  if (!is_numeric_model_key(s.axis)) config_error("axis", "'" + s.axis + "' is not a numeric model key");
  if (s.grid.empty()) config_error("grid", "grid is empty");
  if (!s.series_key.empty()) {
    if (!is_numeric_model_key(s.series_key)) config_error("series", "'" + s.series_key + "' is not a numeric model key");
    if (s.series_key == s.axis) config_error("series", "series key equals the axis");
    if (s.series_values.empty()) config_error("series", "no series values");
  }
  if (s.scenarios.empty()) config_error("scenarios", "no scenarios selected");
  if (s.methods.empty()) config_error("methods", "no methods selected");
  const bool mc = std::find(s.methods.begin(), s.methods.end(), Method::MonteCarlo) != s.methods.end();
  if (mc && s.trials < 2) config_error("trials", "Monte Carlo needs at least 2 trials");
  if (s.quadrature_inner < 1 || s.quadrature_inner > 100000) config_error("quadrature_inner", "must lie in [1, 100000]");
  if (s.quadrature_outer < 1 || s.quadrature_outer > 100000) config_error("quadrature_outer", "must lie in [1, 100000]");
  if (!(s.integration_tol > 0.0 && s.integration_tol < 0.1)) config_error("integration_tol", "must lie in (0, 0.1)");
  if (s.output_path.empty()) config_error("output", "no output path");

  const std::vector<double> series = s.series_key.empty() ? std::vector<double>{0.0} : s.series_values;
  for (double sv : series) {
    for (double gv : s.grid) {
      ModelSettings m = doc.model;
      if (!s.series_key.empty()) set_model_value(m, s.series_key, sv);
      set_model_value(m, s.axis, gv);
      const std::string where = " (at " + s.axis + " = " + format_number(gv) +
                                (s.series_key.empty() ? "" : ", " + s.series_key + " = " + format_number(sv)) + ")";
      check_model(m, where);
      for (ScenarioKind kind : s.scenarios) {
        const bool random = kind == ScenarioKind::UnorderedRandom || kind == ScenarioKind::OrderedRandom;
        const bool ordered = kind == ScenarioKind::OrderedFixed || kind == ScenarioKind::OrderedRandom;
        if (!random && m.nodes_per_cluster != std::floor(m.nodes_per_cluster))
          config_error("nodes_per_cluster", std::string("fixed-size scenario ") + to_string(kind) + " needs an integer" + where);
        if (ordered && m.ordered_rank > 0) {
          const double n = random ? std::ceil(m.nodes_per_cluster) : m.nodes_per_cluster;
          if (m.ordered_rank > n) config_error("ordered_rank", "exceeds the cluster size" + where);
          if (random && m.ordered_rank != n)
            config_error("ordered_rank", "random cluster size supports only the farthest node" + where);
        }
      }
    }
  }
}

std::string describe_document(const SweepDocument& doc) {
  using nlohmann::json;
  const SweepSpec& s = doc.sweep;
  json model = json::object();
  for (const auto& k : kNumericKeys) model[k.name] = k.get(doc.model);
  model["noise_enabled"] = doc.model.noise_enabled;
  model["typical_cluster"] = doc.model.typical_cluster == TypicalClusterRule::Shifted ? "shifted" : "conditioned";
  model["interference"] = doc.model.interference == Interference::Full ? "full" : "intra_limited";

  const LinkParams p = resolve_link(doc.model);
  json resolved = {
      {"typical_power_mw", p.typical_power_mw},
      {"interferer_power_mw", p.interferer_power_mw},
      {"coexist_power_mw", p.coexist_power_mw},
      {"eta", p.eta},
      {"alpha", p.alpha},
      {"delta", p.delta()},
      {"cluster_radius_m", p.cluster_radius},
      {"receiver_density_per_m2", p.receiver_density},
      {"coexist_density_per_m2", p.coexist_density},
      {"noise_mw", p.noise_mw},
      {"gamma_th_linear", db_to_linear(doc.model.gamma_th_db)},
  };
  json scenarios = json::array();
  for (auto k : s.scenarios) scenarios.push_back(to_string(k));
  json methods = json::array();
  for (auto m : s.methods) methods.push_back(to_string(m));
  json doc_json = {
      {"preset", s.preset},
      {"axis", s.axis},
      {"grid", s.grid},
      {"series", {{"key", s.series_key}, {"values", s.series_values}}},
      {"scenarios", scenarios},
      {"methods", methods},
      {"trials", s.trials},
      {"seed", s.seed},
      {"quadrature", {{"inner", s.quadrature_inner}, {"outer", s.quadrature_outer}}},
      {"integration_tol", s.integration_tol},
      {"output", s.output_path},
      {"model", model},
      {"resolved", resolved},
  };
  return doc_json.dump(2);
}

}  // namespace lorasg
