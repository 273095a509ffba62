/*
 * network.hpp
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

#include <string>
#include <variant>

namespace lorasg {

// Linear units throughout: powers in mW, distances in m, densities in 1/m^2.
struct LinkParams {
  double typical_power_mw = 0.0;     // P_x0
  double interferer_power_mw = 0.0;  // P_x
  double coexist_power_mw = 0.0;     // P_z
  double eta = 0.0;
  double alpha = 3.5;
  double cluster_radius = 500.0;     // a
  double receiver_density = 0.0;     // lambda_G
  double coexist_density = 0.0;      // lambda_co
  double noise_mw = 0.0;             // sigma^2

  double delta() const { return 2.0 / alpha; }
  double relative_interferer_power() const { return typical_power_mw / interferer_power_mw; }
  double relative_coexist_power() const { return typical_power_mw / coexist_power_mw; }

  // throws Error(Domain) when a field is outside its physical range
  void validate() const;
};

struct FixedSize {
  int n = 1;
};
struct PoissonSize {
  double mean = 1.0;
};
using ClusterSizeModel = std::variant<FixedSize, PoissonSize>;

struct Unordered {};
struct OrderedRank {
  int k = 1;
};
struct Farthest {};
using Ordering = std::variant<Unordered, OrderedRank, Farthest>;

enum class Interference { Full, IntraLimited };

struct Scenario {
  Ordering ordering = Unordered{};
  ClusterSizeModel size = FixedSize{6};
  Interference interference = Interference::Full;
};

// How the typical cluster is drawn when cluster sizes are Poisson.
enum class TypicalClusterRule {
  Shifted,      // typical node plus Poisson(mean - 1) others
  Conditioned,  // Poisson(mean) redrawn until it holds the requested rank
};

struct NetworkConfig {
  LinkParams link;
  double window_radius = 20000.0;
  TypicalClusterRule typical_rule = TypicalClusterRule::Shifted;
};

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);
double db_to_linear(double db);
double linear_to_db(double linear);
double free_space_eta(double carrier_hz);

double mean_cluster_size(const ClusterSizeModel& size);
bool is_ordered(const Scenario& scenario);
bool is_random_size(const Scenario& scenario);
std::string scenario_tag(const Scenario& scenario);

}  // namespace lorasg
