/*
 * laplace.cpp
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

#include "lorasg/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gc_sums.hpp"
#include "lorasg/error.hpp"

namespace lorasg {

using detail::gc_disc_interference;
using detail::gc_disc_mean;

namespace {

constexpr double kPi = std::numbers::pi;

void check_s(double s) {
  if (!(s >= 0.0) || std::isnan(s)) throw Error(ErrorCode::Domain, "Laplace argument s must be >= 0");
}

void check_size(int n) {
  if (n < 1) throw Error(ErrorCode::Domain, "cluster size must be >= 1");
}

void check_mean(double mean) {
  if (!(mean >= 1.0) || !std::isfinite(mean))
    throw Error(ErrorCode::Domain, "mean cluster size must be >= 1");
}

void check_rank(int k, int n, double rank_distance, const LinkParams& p) {
  check_size(n);
  if (k < 1 || k > n) throw Error(ErrorCode::Domain, "rank k must satisfy 1 <= k <= n");
  if (!(rank_distance > 0.0) || rank_distance > p.cluster_radius)
    throw Error(ErrorCode::Domain, "rank distance must lie in (0, a]");
}

// E[1 / (1 + q r^-alpha)] for r with density 2r / R^2 on [0, R]
double disc_mean(double q, double radius, const LinkParams& p) {
  const double delta = p.delta();
  const double z = std::pow(radius, p.alpha) / q;
  if (!std::isfinite(z)) return 1.0;
  return z * delta / (delta + 1.0) * hyp2f1_1_b(delta + 1.0, z);
}

// same expectation over the annulus [inner, outer]
double annulus_mean(double q, double inner, double outer, const LinkParams& p) {
  const double span = outer * outer - inner * inner;
  if (span < 1e-6 * outer * outer) {
    const double mid = std::sqrt(0.5 * (outer * outer + inner * inner));
    return 1.0 / (1.0 + q * std::pow(mid, -p.alpha));
  }
  const double value =
      (outer * outer * disc_mean(q, outer, p) - inner * inner * disc_mean(q, inner, p)) / span;
  return std::clamp(value, 0.0, 1.0);
}

double pairwise_sum(const double* first, std::size_t count) {
  if (count <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < count; ++i) s += first[i];
    return s;
  }
  const std::size_t half = count / 2;
  return pairwise_sum(first, half) + pairwise_sum(first + half, count - half);
}

}  // namespace

double binomial_beta_sum(int n, double delta) {
  check_size(n);
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorCode::Domain, "delta must lie in (0, 1)");
  std::vector<double> terms;
  terms.reserve(n);
  const double log_nfact = std::lgamma(n + 1.0);
  for (int p = 1; p <= n; ++p) {
    const double log_binom = log_nfact - std::lgamma(p + 1.0) - std::lgamma(n - p + 1.0);
    terms.push_back(std::exp(log_binom + log_beta(p - delta, n - p + delta)));
  }
  return pairwise_sum(terms.data(), terms.size());
}

double laplace_intra_fixed(double s, int n, const LinkParams& p) {
  check_s(s);
  check_size(n);
  if (s == 0.0 || n == 1) return 1.0;
  const double q = s * p.interferer_power_mw * p.eta;
  return std::pow(disc_mean(q, p.cluster_radius, p), n - 1);
}

double laplace_intra_random(double s, double mean, const LinkParams& p) {
  check_s(s);
  check_mean(mean);
  if (s == 0.0 || mean == 1.0) return 1.0;
  const double q = s * p.interferer_power_mw * p.eta;
  const double z = std::pow(p.cluster_radius, p.alpha) / q;
  return std::exp(-(mean - 1.0) * hyp2f1_1_b(p.delta(), z));
}

double laplace_intra_fixed_gc(double s, int n, const LinkParams& p, const QuadratureSpec& quad) {
  check_s(s);
  check_size(n);
  if (s == 0.0 || n == 1) return 1.0;
  const double scaled_q = s * p.interferer_power_mw * p.eta * std::pow(p.cluster_radius, -p.alpha);
  return std::pow(gc_disc_mean(scaled_q, p, quad.inner), n - 1);
}

double laplace_intra_random_gc(double s, double mean, const LinkParams& p,
                               const QuadratureSpec& quad) {
  check_s(s);
  check_mean(mean);
  if (s == 0.0 || mean == 1.0) return 1.0;
  const double scaled_q = s * p.interferer_power_mw * p.eta * std::pow(p.cluster_radius, -p.alpha);
  return std::exp(-(mean - 1.0) * gc_disc_interference(scaled_q, p, quad.inner));
}

double laplace_inter_fixed_upper(double s, int n, const LinkParams& p) {
  check_s(s);
  check_size(n);
  if (s == 0.0 || p.receiver_density == 0.0) return 1.0;
  const double delta = p.delta();
  const double q = s * p.interferer_power_mw * p.eta;
  return std::exp(-kPi * p.receiver_density * std::pow(q, delta) * delta *
                  binomial_beta_sum(n, delta));
}

double laplace_inter_random_lower(double s, double mean, const LinkParams& p) {
  check_s(s);
  check_mean(mean);
  if (s == 0.0 || p.receiver_density == 0.0) return 1.0;
  const double delta = p.delta();
  const double q = s * p.interferer_power_mw * p.eta;
  return std::exp(-kPi * kPi * p.receiver_density * mean * std::pow(q, delta) * delta /
                  std::sin(kPi * delta));
}

double laplace_coexist(double s, const LinkParams& p) {
  check_s(s);
  if (s == 0.0 || p.coexist_density == 0.0) return 1.0;
  const double delta = p.delta();
  const double q = s * p.coexist_power_mw * p.eta;
  return std::exp(-kPi * p.coexist_density * gamma_fn(1.0 + delta) * gamma_fn(1.0 - delta) *
                  std::pow(q, delta));
}

double laplace_intra_ordered_fixed(double s, int k, int n, double rank_distance,
                                   const LinkParams& p) {
  check_s(s);
  check_rank(k, n, rank_distance, p);
  if (s == 0.0) return 1.0;
  const double q = s * p.interferer_power_mw * p.eta;
  const double near = k == 1 ? 1.0 : std::pow(disc_mean(q, rank_distance, p), k - 1);
  const double far =
      k == n ? 1.0 : std::pow(annulus_mean(q, rank_distance, p.cluster_radius, p), n - k);
  return near * far;
}

double laplace_intra_ordered_random(double s, double mean, double rank_distance,
                                    const LinkParams& p) {
  check_s(s);
  check_mean(mean);
  if (!(rank_distance > 0.0) || rank_distance > p.cluster_radius)
    throw Error(ErrorCode::Domain, "rank distance must lie in (0, a]");
  if (s == 0.0 || mean == 1.0) return 1.0;
  const double q = s * p.interferer_power_mw * p.eta;
  const double z = std::pow(rank_distance, p.alpha) / q;
  return std::exp(-(mean - 1.0) * hyp2f1_1_b(p.delta(), z));
}

double laplace_intra_ordered_fixed_gc(double s, int k, int n, double rank_distance,
                                      const LinkParams& p, const QuadratureSpec& quad) {
  check_s(s);
  check_rank(k, n, rank_distance, p);
  if (s == 0.0) return 1.0;
  const double q = s * p.interferer_power_mw * p.eta;
  const double a = p.cluster_radius;
  const double near_sum = gc_disc_mean(q * std::pow(rank_distance, -p.alpha), p, quad.inner);
  const double near = k == 1 ? 1.0 : std::pow(near_sum, k - 1);
  if (k == n) return near;
  const double span = a * a - rank_distance * rank_distance;
  double far_mean = 0.0;
  if (span < 1e-6 * a * a) {
    const double mid = std::sqrt(0.5 * (a * a + rank_distance * rank_distance));
    far_mean = 1.0 / (1.0 + q * std::pow(mid, -p.alpha));
  } else {
    const double outer_sum = gc_disc_mean(q * std::pow(a, -p.alpha), p, quad.inner);
    far_mean = (a * a * outer_sum - rank_distance * rank_distance * near_sum) / span;
  }
  // GC cancellation near r_k -> a can leave [0, 1]
  return near * std::pow(std::clamp(far_mean, 0.0, 1.0), n - k);
}

double laplace_intra_ordered_random_gc(double s, double mean, double rank_distance,
                                       const LinkParams& p, const QuadratureSpec& quad) {
  check_s(s);
  check_mean(mean);
  if (!(rank_distance > 0.0) || rank_distance > p.cluster_radius)
    throw Error(ErrorCode::Domain, "rank distance must lie in (0, a]");
  if (s == 0.0 || mean == 1.0) return 1.0;
  const double q = s * p.interferer_power_mw * p.eta;
  const double scaled_q = q * std::pow(rank_distance, -p.alpha);
  return std::exp(-(mean - 1.0) * gc_disc_interference(scaled_q, p, quad.inner));
}

}  // namespace lorasg
