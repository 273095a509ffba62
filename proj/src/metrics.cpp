/*
 * metrics.cpp
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

#include "lorasg/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "lorasg/error.hpp"

namespace lorasg {

namespace {
void check_consistent(double gamma_th, const CoverageResult& coverage) {
  const double scale = std::max(std::abs(gamma_th), std::abs(coverage.gamma_th));
  if (std::abs(gamma_th - coverage.gamma_th) > 1e-12 * scale)
    throw Error(ErrorCode::Mismatch, "coverage result was computed at a different SINR threshold");
}
}  // namespace

double rate_from_threshold(double gamma_th) {
  if (!(gamma_th >= 0.0) || !std::isfinite(gamma_th))
    throw Error(ErrorCode::Domain, "SINR threshold must be finite and >= 0");
  return std::log2(1.0 + gamma_th);
}

double area_spectral_efficiency(double nodes_per_cluster, double receiver_density, double gamma_th,
                                const CoverageResult& coverage) {
  check_consistent(gamma_th, coverage);
  if (!(nodes_per_cluster >= 0.0) || !(receiver_density >= 0.0))
    throw Error(ErrorCode::Domain, "cluster size and receiver density must be non-negative");
  return nodes_per_cluster * receiver_density * rate_from_threshold(gamma_th) * coverage.value;
}

double energy_efficiency(double gamma_th, double tx_power_mw, const CoverageResult& coverage) {
  check_consistent(gamma_th, coverage);
  if (!(tx_power_mw > 0.0)) throw Error(ErrorCode::Domain, "transmit power must be positive");
  return rate_from_threshold(gamma_th) * coverage.value / tx_power_mw;
}

MetricResult evaluate_metrics(double nodes_per_cluster, double receiver_density,
                              double tx_power_mw, const CoverageResult& coverage) {
  MetricResult m;
  m.coverage = coverage;
  m.rate = rate_from_threshold(coverage.gamma_th);
  m.ase = area_spectral_efficiency(nodes_per_cluster, receiver_density, coverage.gamma_th, coverage);
  m.ee = energy_efficiency(coverage.gamma_th, tx_power_mw, coverage);
  return m;
}

double noise_power_mw(double bandwidth_hz) {
  if (!(bandwidth_hz > 0.0)) throw Error(ErrorCode::Domain, "bandwidth must be positive");
  return std::pow(10.0, (-174.0 + 10.0 * std::log10(bandwidth_hz)) / 10.0);
}

AseScan scan_ase(int n_max, double receiver_density, double gamma_th,
                 const std::function<CoverageResult(int)>& coverage_of_n) {
  if (n_max < 1) throw Error(ErrorCode::Domain, "scan_ase: n_max must be >= 1");
  AseScan scan;
  for (int n = 1; n <= n_max; ++n) {
    const double tau = area_spectral_efficiency(n, receiver_density, gamma_th, coverage_of_n(n));
    scan.ase.push_back(tau);
    if (n == 1 || tau > scan.best_ase) {
      scan.best_ase = tau;
      scan.best_n = n;
    }
  }
  return scan;
}

}  // namespace lorasg
