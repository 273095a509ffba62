/*
 * laplace.hpp
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

#include "lorasg/network.hpp"
#include "lorasg/special_functions.hpp"

namespace lorasg {

// Laplace transforms E[exp(-s I)] of the interference fields seen by the
// typical receiver. Every form returns exactly 1 at s = 0.

// intra-cluster, unordered typical node
double laplace_intra_fixed(double s, int n, const LinkParams& p);
double laplace_intra_random(double s, double mean, const LinkParams& p);
double laplace_intra_fixed_gc(double s, int n, const LinkParams& p, const QuadratureSpec& quad);
double laplace_intra_random_gc(double s, double mean, const LinkParams& p,
                               const QuadratureSpec& quad);

// inter-cluster: upper bound for fixed size, lower bound for Poisson size
double laplace_inter_fixed_upper(double s, int n, const LinkParams& p);
double laplace_inter_random_lower(double s, double mean, const LinkParams& p);

double laplace_coexist(double s, const LinkParams& p);

// intra-cluster, typical node is the rank-k closest at distance rank_distance
double laplace_intra_ordered_fixed(double s, int k, int n, double rank_distance,
                                   const LinkParams& p);
double laplace_intra_ordered_random(double s, double mean, double rank_distance,
                                    const LinkParams& p);
double laplace_intra_ordered_fixed_gc(double s, int k, int n, double rank_distance,
                                      const LinkParams& p, const QuadratureSpec& quad);
double laplace_intra_ordered_random_gc(double s, double mean, double rank_distance,
                                       const LinkParams& p, const QuadratureSpec& quad);

// sum_{p=1}^{n} C(n, p) B(p - delta, n - p + delta), evaluated in log space
double binomial_beta_sum(int n, double delta);

}  // namespace lorasg
