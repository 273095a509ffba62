/*
 * special_functions.cpp
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

#include "lorasg/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lorasg/error.hpp"

namespace lorasg {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTermTol = 1e-17;
constexpr int kMaxTerms = 100000;

[[noreturn]] void series_failed(const char* branch, double b, double z) {
  throw Error(ErrorCode::Convergence,
              std::string("hyp2f1_1_b: ") + branch + " series did not converge for b=" +
                  std::to_string(b) + ", z=" + std::to_string(z));
}

// sum_k (-z)^k b / (b + k), used for z <= 1/2
double small_argument(double b, double z) {
  double sum = 0.0;
  double power = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double term = power * b / (b + k);
    sum += term;
    if (std::abs(term) <= kTermTol * std::abs(sum)) return sum;
    power *= -z;
  }
  series_failed("small-argument", b, z);
}

// Pfaff transform: (1 + z)^-1 sum_k k! / (b + 1)_k w^k with w = z / (1 + z)
double pfaff(double b, double z) {
  const double w = z / (1.0 + z);
  double sum = 1.0;
  double term = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (k + 1.0) * w / (b + 1.0 + k);
    sum += term;
    if (term <= kTermTol * sum) return sum / (1.0 + z);
  }
  series_failed("Pfaff", b, z);
}

// pi / sin(pi e) - 1 / e for e in [0, 1/2]
double reflection_remainder(double e) {
  if (e < 1e-3) return kPi * kPi * e / 6.0 * (1.0 + 7.0 * kPi * kPi * e * e / 60.0);
  return kPi / std::sin(kPi * e) - 1.0 / e;
}

// sum_{k>=1} (-1)^k z^(-1-k) / (k + shift)
double inverse_tail(double shift, double z, double scale) {
  double tail = 0.0;
  double power = 1.0 / (z * z);
  for (int k = 1; k < kMaxTerms; ++k) {
    const double term = (k % 2 == 1 ? -power : power) / (k + shift);
    tail += term;
    if (std::abs(term) <= kTermTol * std::abs(scale)) return tail;
    power /= z;
  }
  series_failed("large-argument", shift, z);
}

// Analytic continuation in 1/z for f in (0, 3/2). The k = 0 term of the
// z^-1 series has a pole at f = 1; it is folded into the z^-f term so the
// result stays smooth on both sides of the integer.
double large_argument(double f, double z) {
  const double log_z = std::log(z);
  if (f <= 1.0) {
    const double eps = 1.0 - f;
    double reflection = 0.0;  // pi / sin(pi f) - 1 / eps
    if (eps <= 0.5)
      reflection = reflection_remainder(eps);
    else
      reflection = kPi / std::sin(kPi * f) - 1.0 / eps;
    const double growth = eps == 0.0 ? log_z : std::expm1(eps * log_z) / eps;
    const double head = f * std::pow(z, -f) * reflection + f * growth / z;
    return head - f * inverse_tail(eps, z, head);
  }
  const double phi = f - 1.0;
  const double decay = -std::expm1(-phi * log_z) / phi;
  const double head = f / z * (decay - std::pow(z, -phi) * reflection_remainder(phi));
  return head - f * inverse_tail(-phi, z, head);
}

}  // namespace

double hyp2f1_1_b(double b, double z) {
  if (!(b > 0.0) || !std::isfinite(b))
    throw Error(ErrorCode::Domain, "hyp2f1_1_b: b must be a positive finite number");
  if (!(z >= 0.0))
    throw Error(ErrorCode::Domain, "hyp2f1_1_b: z must be non-negative");
  if (z == 0.0) return 1.0;
  if (std::isinf(z)) return 0.0;
  if (z <= 0.5) return small_argument(b, z);
  if (z <= 2.0) return pfaff(b, z);

  // b = m + f with f in [1/2, 3/2) (or f = b below 1/2), then climb with
  // F_{c+1} = (c + 1) / (c z) (1 - F_c); c >= 1/2 keeps 1 - F_c well conditioned
  const double m = b < 0.5 ? 0.0 : std::floor(b - 0.5);
  const double f = b - m;
  double value = large_argument(f, z);
  for (double c = f; c + 0.5 < b; c += 1.0) value = (c + 1.0) / (c * z) * (1.0 - value);
  return value;
}

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw Error(ErrorCode::Domain, "gamma_fn: argument must be positive and finite");
  const double value = std::tgamma(x);
  if (!std::isfinite(value))
    throw Error(ErrorCode::Domain, "gamma_fn: result overflows double");
  return value;
}

double log_beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
    throw Error(ErrorCode::Domain, "beta_fn: arguments must be positive and finite");
  return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

double beta_fn(double x, double y) {
  return std::exp(log_beta(x, y));
}

ChebyshevRule make_chebyshev_rule(int order) {
  if (order < 1) throw Error(ErrorCode::Domain, "make_quadrature: node count must be >= 1");
  ChebyshevRule rule;
  rule.order = order;
  rule.weight = kPi / order;
  rule.node.resize(order);
  rule.unit_node.resize(order);
  rule.sine.resize(order);
  // first half computed, second half mirrored so node[i] == -node[order-1-i] exactly
  for (int i = 0; i < (order + 1) / 2; ++i) {
    const double angle = (2.0 * i + 1.0) * kPi / (2.0 * order);
    const int j = order - 1 - i;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    rule.node[i] = c;
    rule.sine[i] = s;
    rule.node[j] = -c;
    rule.sine[j] = s;
    const double half_cos = std::cos(angle / 2.0);
    const double half_sin = std::sin(angle / 2.0);
    rule.unit_node[i] = half_cos * half_cos;
    rule.unit_node[j] = half_sin * half_sin;
  }
  if (order % 2 == 1) rule.node[order / 2] = 0.0;
  return rule;
}

QuadratureSpec make_quadrature(int inner_order, int outer_order) {
  return QuadratureSpec{make_chebyshev_rule(inner_order), make_chebyshev_rule(outer_order)};
}

}  // namespace lorasg
