/*
 * coverage.hpp
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

#include <optional>

#include "lorasg/network.hpp"
#include "lorasg/special_functions.hpp"

namespace lorasg {

enum class Method { ExactIntegral, GaussChebyshev, MonteCarlo };
enum class BoundSide { UpperBound, LowerBound, Exact, Estimate };

struct CoverageResult {
  double value = 0.0;
  Method method = Method::ExactIntegral;
  BoundSide bound_side = BoundSide::Exact;
  std::optional<double> ci_halfwidth;  // Monte Carlo only
  double gamma_th = 0.0;               // linear SINR threshold
};

const char* to_string(Method method);
const char* to_string(BoundSide side);

// gamma_th is linear. Exact forms integrate with adaptive Gauss-Kronrod to rel_tol.
CoverageResult coverage_unordered_exact(double gamma_th, const Scenario& scenario,
                                        const LinkParams& p, double rel_tol = 1e-6);
CoverageResult coverage_unordered_gc(double gamma_th, const Scenario& scenario,
                                     const LinkParams& p, const QuadratureSpec& quad);
// no inter-cluster or coexisting interference and no noise; independent of a
CoverageResult coverage_intra_limited(double gamma_th, const Scenario& scenario,
                                      const LinkParams& p, const QuadratureSpec& quad);
CoverageResult coverage_ordered_exact(double gamma_th, const Scenario& scenario,
                                      const LinkParams& p, double rel_tol = 1e-6);
CoverageResult coverage_ordered_gc(double gamma_th, const Scenario& scenario,
                                   const LinkParams& p, const QuadratureSpec& quad);

// dispatch on scenario ordering and interference mode
CoverageResult coverage_exact(double gamma_th, const Scenario& scenario, const LinkParams& p,
                              double rel_tol = 1e-6);
CoverageResult coverage_gc(double gamma_th, const Scenario& scenario, const LinkParams& p,
                           const QuadratureSpec& quad);

// (k, n) used by the ordered forms; n = ceil(mean) for Poisson sizes
struct RankPair {
  int k = 1;
  int n = 1;
};
RankPair resolve_rank(const Scenario& scenario);

}  // namespace lorasg
