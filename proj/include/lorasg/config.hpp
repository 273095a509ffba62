/*
 * config.hpp
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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lorasg/coverage.hpp"
#include "lorasg/network.hpp"

namespace lorasg {

// User-facing model settings. Units are part of every key name.
struct ModelSettings {
  double tx_power_dbm = 14.0;                   // interfering LoRa nodes
  std::optional<double> typical_tx_power_dbm;   // defaults to tx_power_dbm
  double coexist_tx_power_dbm = 14.0;
  double path_loss_exponent = 3.5;
  double carrier_frequency_hz = 868e6;
  std::optional<double> path_loss_constant;     // defaults to free space at the carrier
  double bandwidth_hz = 125e3;
  std::optional<double> noise_dbm;              // defaults to the thermal floor over bandwidth_hz
  bool noise_enabled = true;
  double cluster_radius_m = 500.0;
  double receiver_density_per_m2 = 0.0;         // set by the constructor
  double coexist_density_per_m2 = 0.0;
  double nodes_per_cluster = 6.0;
  double gamma_th_db = -10.0;
  int ordered_rank = 0;                         // 0: farthest node of the cluster
  double window_radius_m = 20000.0;
  TypicalClusterRule typical_cluster = TypicalClusterRule::Shifted;
  Interference interference = Interference::Full;

  ModelSettings();
};

// one receiver per 10 disc areas of radius 500 m
double default_density_per_m2();

enum class ScenarioKind { UnorderedFixed, UnorderedRandom, OrderedFixed, OrderedRandom };

struct SweepSpec {
  std::string preset = "custom";
  std::string axis = "gamma_th_db";
  std::vector<double> grid;
  std::string series_key;
  std::vector<double> series_values;
  std::vector<ScenarioKind> scenarios;
  std::vector<Method> methods;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  int quadrature_inner = 50;
  int quadrature_outer = 50;
  double integration_tol = 1e-6;
  std::string output_path;
};

struct SweepDocument {
  ModelSettings model;
  SweepSpec sweep;
};

std::vector<std::string> preset_names();
SweepDocument preset_document(std::string_view name);

// Line format: `key = value`, `#` starts a comment. Lists are comma separated,
// numeric lists also accept `start:stop:step`. A `preset` key is applied first.
SweepDocument parse_config(std::string_view text);
SweepDocument load_config(const std::filesystem::path& path);

// Throws Error(Config) naming the key on an unknown key or malformed value.
void apply_setting(SweepDocument& doc, std::string_view key, std::string_view value);
// Numeric model keys usable as sweep axis or series.
void set_model_value(ModelSettings& model, std::string_view key, double value);
double get_model_value(const ModelSettings& model, std::string_view key);
bool is_numeric_model_key(std::string_view key);

// Throws Error(Config) when the model settings alone are inconsistent.
void validate_model(const ModelSettings& model);
// Throws Error(Config) when the document breaks a model invariant.
void validate_document(const SweepDocument& doc);

LinkParams resolve_link(const ModelSettings& model);
NetworkConfig resolve_network(const ModelSettings& model);
Scenario make_scenario(ScenarioKind kind, const ModelSettings& model);

const char* to_string(ScenarioKind kind);
ScenarioKind parse_scenario_kind(std::string_view text);
Method parse_method(std::string_view text);

// resolved configuration with the dB originals echoed, as JSON text
std::string describe_document(const SweepDocument& doc);

}  // namespace lorasg
