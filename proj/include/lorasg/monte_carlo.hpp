/*
 * monte_carlo.hpp
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
#include <span>
#include <string>
#include <vector>

#include "lorasg/metrics.hpp"
#include "lorasg/network.hpp"
#include "lorasg/point_process.hpp"

namespace lorasg {

struct SimSpec {
  NetworkConfig config;
  Scenario scenario;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::vector<double> thresholds;  // linear; all share each trial's realization
  unsigned workers = 0;            // 0: default_worker_count()
  std::string trace_path;          // per-trial SINR dump when non-empty
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t conditioning_retries = 0;

  double ci95_halfwidth() const { return 1.96 * std_error; }
};

// Received powers at the typical receiver for one fading draw.
struct LinkSample {
  double signal = 0.0;
  double intra = 0.0;
  double inter = 0.0;
  double coexist = 0.0;
  double noise = 0.0;

  double sinr() const { return signal / (intra + inter + coexist + noise); }
};

LinkSample sample_link(const Realization& realization, Rng& fading, const LinkParams& p,
                       Interference mode = Interference::Full);
double sinr_of_realization(const Realization& realization, Rng& fading, const LinkParams& p,
                           Interference mode = Interference::Full);

std::vector<McEstimate> estimate_coverage(const SimSpec& spec);

enum class Field { Intra, Inter, Coexist };
std::vector<McEstimate> estimate_laplace(const SimSpec& spec, Field field,
                                         std::span<const double> s_grid);

std::vector<MetricResult> estimate_metrics(const SimSpec& spec);
CoverageResult to_coverage_result(const McEstimate& estimate, double gamma_th);

// LORASG_WORKERS if set and valid, else hardware concurrency
unsigned default_worker_count();

}  // namespace lorasg
