/*
 * network.cpp
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

#include "lorasg/network.hpp"

#include <cmath>
#include <numbers>

#include "lorasg/error.hpp"

namespace lorasg {

namespace {
constexpr double kSpeedOfLight = 299792458.0;

void require(bool ok, const char* message) {
  if (!ok) throw Error(ErrorCode::Domain, message);
}
}  // namespace

void LinkParams::validate() const {
  require(std::isfinite(alpha) && alpha > 2.0,
          "path-loss exponent must exceed 2 (delta = 2/alpha must lie in (0, 1))");
  require(typical_power_mw > 0.0 && std::isfinite(typical_power_mw),
          "typical transmit power must be positive");
  require(interferer_power_mw > 0.0 && std::isfinite(interferer_power_mw),
          "interferer transmit power must be positive");
  require(coexist_power_mw > 0.0 && std::isfinite(coexist_power_mw),
          "coexisting transmit power must be positive");
  require(eta > 0.0 && std::isfinite(eta), "path-loss constant must be positive");
  require(cluster_radius > 0.0 && std::isfinite(cluster_radius), "cluster radius must be positive");
  require(receiver_density >= 0.0 && std::isfinite(receiver_density),
          "receiver density must be non-negative");
  require(coexist_density >= 0.0 && std::isfinite(coexist_density),
          "coexisting density must be non-negative");
  require(noise_mw >= 0.0 && std::isfinite(noise_mw), "noise power must be non-negative");
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double free_space_eta(double carrier_hz) {
  if (!(carrier_hz > 0.0)) throw Error(ErrorCode::Domain, "carrier frequency must be positive");
  const double x = kSpeedOfLight / (4.0 * std::numbers::pi * carrier_hz);
  return x * x;
}

double mean_cluster_size(const ClusterSizeModel& size) {
  if (const auto* fixed = std::get_if<FixedSize>(&size)) return fixed->n;
  return std::get<PoissonSize>(size).mean;
}

bool is_ordered(const Scenario& scenario) {
  return !std::holds_alternative<Unordered>(scenario.ordering);
}

bool is_random_size(const Scenario& scenario) {
  return std::holds_alternative<PoissonSize>(scenario.size);
}

std::string scenario_tag(const Scenario& scenario) {
  std::string tag = is_ordered(scenario) ? "ordered" : "unordered";
  if (const auto* rank = std::get_if<OrderedRank>(&scenario.ordering))
    tag += "-k" + std::to_string(rank->k);
  tag += is_random_size(scenario) ? "-random" : "-fixed";
  if (scenario.interference == Interference::IntraLimited) tag += "-intra";
  return tag;
}

}  // namespace lorasg
