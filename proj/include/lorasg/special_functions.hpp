/*
 * special_functions.hpp
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

#include <vector>

namespace lorasg {

// 2F1(1, b; b + 1; -z) for b > 0, z >= 0. Equals b * int_0^1 t^(b-1) / (1 + z t) dt.
double hyp2f1_1_b(double b, double z);

double gamma_fn(double x);
double log_beta(double x, double y);
double beta_fn(double x, double y);

// Gauss-Chebyshev rule of the first kind. Node i sits at angle (2i + 1) pi / (2 order).
struct ChebyshevRule {
  int order = 0;
  double weight = 0.0;              // pi / order
  std::vector<double> node;         // cos(angle), in (-1, 1)
  std::vector<double> unit_node;    // (node + 1) / 2, in (0, 1)
  std::vector<double> sine;         // sqrt(1 - node^2)
};

struct QuadratureSpec {
  ChebyshevRule inner;   // T nodes, over the interferer distance
  ChebyshevRule outer;   // M nodes, over the serving distance
};

ChebyshevRule make_chebyshev_rule(int order);
QuadratureSpec make_quadrature(int inner_order, int outer_order);

}  // namespace lorasg
