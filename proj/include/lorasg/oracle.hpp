/*
 * oracle.hpp
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
#include <string_view>
#include <vector>

namespace lorasg {

// Independent numerical routes for the closed forms: double-exponential
// quadrature of the defining integrals, never the series used by the library.
struct OracleRow {
  std::string name;
  double implementation = 0.0;
  double oracle = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// check: "2f1", "beta", "laplace" or "all"
std::vector<OracleRow> run_oracle_checks(std::string_view check);
std::string format_oracle_table(const std::vector<OracleRow>& rows);

namespace oracle {
double hyp2f1_1_b(double b, double z);
double gamma(double x);
double beta(double x, double y);
double binomial_beta_sum(int n, double delta);
// E[1 / (1 + q r^-alpha)] for r ~ 2r dr / (outer^2 - inner^2) on [inner, outer]
double annulus_mean(double q, double alpha, double inner, double outer);
// int_0^inf (1 - (1 + q r^-alpha)^-n) 2 pi r dr  (n = 0 means the single-node form q r^-a / (1 + q r^-a))
double plane_integral(double q, double alpha, int n);
}  // namespace oracle

}  // namespace lorasg
