/*
 * metrics.hpp
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

#include <functional>
#include <vector>

#include "lorasg/coverage.hpp"

namespace lorasg {

struct MetricResult {
  double rate = 0.0;  // log2(1 + gamma_th), bit/s/Hz
  double ase = 0.0;   // bit/s/Hz/m^2
  double ee = 0.0;    // bit/s/Hz per mW of transmit power
  CoverageResult coverage;
};

double rate_from_threshold(double gamma_th);
double area_spectral_efficiency(double nodes_per_cluster, double receiver_density, double gamma_th,
                                const CoverageResult& coverage);
double energy_efficiency(double gamma_th, double tx_power_mw, const CoverageResult& coverage);
MetricResult evaluate_metrics(double nodes_per_cluster, double receiver_density,
                              double tx_power_mw, const CoverageResult& coverage);

// thermal floor -174 dBm/Hz + 10 log10(B)
double noise_power_mw(double bandwidth_hz);

struct AseScan {
  std::vector<double> ase;  // ase[i] belongs to n = i + 1
  int best_n = 0;
  double best_ase = 0.0;
};
AseScan scan_ase(int n_max, double receiver_density, double gamma_th,
                 const std::function<CoverageResult(int)>& coverage_of_n);

}  // namespace lorasg
