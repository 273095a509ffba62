/*
 * gc_sums.hpp
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

#include <cmath>

#include "lorasg/network.hpp"
#include "lorasg/special_functions.hpp"

namespace lorasg::detail {

// omega sum mu_t c_t^(alpha+1) / (c_t^alpha + K): GC estimate of E[1 / (1 + K c^-alpha)], c ~ 2c dc
inline double gc_disc_mean(double k_scaled, const LinkParams& p, const ChebyshevRule& rule) {
  double sum = 0.0;
  for (int t = 0; t < rule.order; ++t) {
    const double ca = std::pow(rule.unit_node[t], p.alpha);
    sum += rule.sine[t] * ca * rule.unit_node[t] / (ca + k_scaled);
  }
  return rule.weight * sum;
}

// omega sum mu_t c_t / (c_t^alpha / K + 1): GC estimate of F_delta(1 / K)
inline double gc_disc_interference(double k_scaled, const LinkParams& p,
                                   const ChebyshevRule& rule) {
  double sum = 0.0;
  for (int t = 0; t < rule.order; ++t) {
    const double ca = std::pow(rule.unit_node[t], p.alpha);
    sum += rule.sine[t] * rule.unit_node[t] / (ca / k_scaled + 1.0);
  }
  return rule.weight * sum;
}

}  // namespace lorasg::detail
