/*
 * coverage.cpp
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

#include "lorasg/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gc_sums.hpp"
#include "integrate.hpp"
#include "lorasg/error.hpp"
#include "lorasg/laplace.hpp"
#include "lorasg/point_process.hpp"

namespace lorasg {

using detail::gc_disc_interference;
using detail::gc_disc_mean;

namespace {

constexpr double kPi = std::numbers::pi;

void check_threshold(double gamma_th) {
  if (!(gamma_th >= 0.0) || !std::isfinite(gamma_th))
    throw Error(ErrorCode::Domain, "SINR threshold must be finite and >= 0");
}

LinkParams effective_params(const Scenario& scenario, const LinkParams& p) {
  p.validate();
  LinkParams out = p;
  if (scenario.interference == Interference::IntraLimited) {
    out.receiver_density = 0.0;
    out.coexist_density = 0.0;
    out.noise_mw = 0.0;
  }
  return out;
}

BoundSide side_of(const Scenario& scenario) {
  if (scenario.interference == Interference::IntraLimited) return BoundSide::Exact;
  return is_random_size(scenario) ? BoundSide::LowerBound : BoundSide::UpperBound;
}

int fixed_size(const Scenario& scenario) {
  const int n = std::get<FixedSize>(scenario.size).n;
  if (n < 1) throw Error(ErrorCode::Domain, "fixed cluster size must be >= 1");
  return n;
}

double poisson_mean(const Scenario& scenario) {
  const double mean = std::get<PoissonSize>(scenario.size).mean;
  if (!(mean >= 1.0) || !std::isfinite(mean))
    throw Error(ErrorCode::Domain, "mean cluster size must be >= 1");
  return mean;
}

double inter_laplace(double s, const Scenario& scenario, const LinkParams& p) {
  if (is_random_size(scenario)) return laplace_inter_random_lower(s, poisson_mean(scenario), p);
  return laplace_inter_fixed_upper(s, fixed_size(scenario), p);
}

// exponent per unit l^2 of the inter-cluster and coexisting terms in GC form
double outer_field_coefficient(double gamma_th, const Scenario& scenario, const LinkParams& p) {
  const double delta = p.delta();
  const double a2 = p.cluster_radius * p.cluster_radius;
  const double sinc_factor = kPi * kPi * delta / std::sin(kPi * delta);
  double inter = 0.0;
  if (p.receiver_density > 0.0) {
    const double ratio = std::pow(gamma_th / p.relative_interferer_power(), delta);
    if (is_random_size(scenario))
      inter = a2 * sinc_factor * p.receiver_density * poisson_mean(scenario) * ratio;
    else
      inter = a2 * kPi * p.receiver_density * delta *
              binomial_beta_sum(fixed_size(scenario), delta) * ratio;
  }
  double coexist = 0.0;
  if (p.coexist_density > 0.0)
    coexist = a2 * sinc_factor * p.coexist_density *
              std::pow(gamma_th / p.relative_coexist_power(), delta);
  return inter + coexist;
}

CoverageResult make_result(double value, Method method, const Scenario& scenario,
                           double gamma_th) {
  CoverageResult r;
  r.value = std::clamp(value, 0.0, 1.0);
  r.method = method;
  r.bound_side = side_of(scenario);
  r.gamma_th = gamma_th;
  return r;
}

}  // namespace

const char* to_string(Method method) {
  switch (method) {
    case Method::ExactIntegral: return "exact";
    case Method::GaussChebyshev: return "gc";
    case Method::MonteCarlo: return "mc";
  }
  return "unknown";
}

const char* to_string(BoundSide side) {
  switch (side) {
    case BoundSide::UpperBound: return "upper";
    case BoundSide::LowerBound: return "lower";
    case BoundSide::Exact: return "exact";
    case BoundSide::Estimate: return "estimate";
  }
  return "unknown";
}

RankPair resolve_rank(const Scenario& scenario) {
  int n = 0;
  if (is_random_size(scenario)) {
    n = static_cast<int>(std::ceil(poisson_mean(scenario)));
  } else {
    n = fixed_size(scenario);
  }
  if (std::holds_alternative<Farthest>(scenario.ordering) ||
      std::holds_alternative<Unordered>(scenario.ordering))
    return {n, n};
  const int k = std::get<OrderedRank>(scenario.ordering).k;
  if (k < 1 || k > n) throw Error(ErrorCode::Domain, "rank k must satisfy 1 <= k <= n");
  if (is_random_size(scenario) && k != n)
    throw Error(ErrorCode::Domain,
                "random cluster size supports only the farthest node (k = ceil(mean))");
  return {k, n};
}

CoverageResult coverage_unordered_exact(double gamma_th, const Scenario& scenario,
                                        const LinkParams& p_in, double rel_tol) {
  check_threshold(gamma_th);
  if (is_ordered(scenario))
    throw Error(ErrorCode::Domain, "coverage_unordered_exact needs an unordered scenario");
  const LinkParams p = effective_params(scenario, p_in);
  const double a = p.cluster_radius;
  const double scale = gamma_th / (p.typical_power_mw * p.eta);
  const bool random = is_random_size(scenario);
  auto integrand = [&](double r) {
    const double rho = std::pow(r, p.alpha) * scale;
    const double intra = random ? laplace_intra_random(rho, poisson_mean(scenario), p)
                                : laplace_intra_fixed(rho, fixed_size(scenario), p);
    return std::exp(-rho * p.noise_mw) * intra * inter_laplace(rho, scenario, p) *
           laplace_coexist(rho, p) * 2.0 * r / (a * a);
  };
  const double value = detail::integrate_adaptive(integrand, 0.0, a, rel_tol, "coverage_exact");
  return make_result(value, Method::ExactIntegral, scenario, gamma_th);
}

CoverageResult coverage_unordered_gc(double gamma_th, const Scenario& scenario,
                                     const LinkParams& p_in, const QuadratureSpec& quad) {
  check_threshold(gamma_th);
  if (is_ordered(scenario))
    throw Error(ErrorCode::Domain, "coverage_unordered_gc needs an unordered scenario");
  const LinkParams p = effective_params(scenario, p_in);
  const double tx = p.relative_interferer_power();
  const double rho_scale = std::pow(p.cluster_radius, p.alpha) * gamma_th / (p.typical_power_mw * p.eta);
  const double field = outer_field_coefficient(gamma_th, scenario, p);
  const bool random = is_random_size(scenario);

  double sum = 0.0;
  const ChebyshevRule& outer = quad.outer;
  for (int m = 0; m < outer.order; ++m) {
    const double l = outer.unit_node[m];
    const double la = std::pow(l, p.alpha);
    const double k_scaled = la * gamma_th / tx;
    double intra = 1.0;
    if (random) {
      const double mean = poisson_mean(scenario);
      if (mean > 1.0 && gamma_th > 0.0)
        intra = std::exp(-(mean - 1.0) * gc_disc_interference(k_scaled, p, quad.inner));
    } else {
      const int n = fixed_size(scenario);
      if (n > 1 && gamma_th > 0.0) intra = std::pow(gc_disc_mean(k_scaled, p, quad.inner), n - 1);
    }
    sum += outer.sine[m] * l * std::exp(-la * rho_scale * p.noise_mw - l * l * field) * intra;
  }
  return make_result(outer.weight * sum, Method::GaussChebyshev, scenario, gamma_th);
}

CoverageResult coverage_intra_limited(double gamma_th, const Scenario& scenario,
                                      const LinkParams& p, const QuadratureSpec& quad) {
  Scenario limited = scenario;
  limited.interference = Interference::IntraLimited;
  if (is_ordered(limited)) return coverage_ordered_gc(gamma_th, limited, p, quad);
  return coverage_unordered_gc(gamma_th, limited, p, quad);
}

CoverageResult coverage_ordered_exact(double gamma_th, const Scenario& scenario,
                                      const LinkParams& p_in, double rel_tol) {
  check_threshold(gamma_th);
  if (!is_ordered(scenario))
    throw Error(ErrorCode::Domain, "coverage_ordered_exact needs an ordered scenario");
  const LinkParams p = effective_params(scenario, p_in);
  const RankPair rank = resolve_rank(scenario);
  const double a = p.cluster_radius;
  const double scale = gamma_th / (p.typical_power_mw * p.eta);
  const bool random = is_random_size(scenario);
  auto integrand = [&](double r) {
    const double rho = std::pow(r, p.alpha) * scale;
    const double intra = random
                             ? laplace_intra_ordered_random(rho, poisson_mean(scenario), r, p)
                             : laplace_intra_ordered_fixed(rho, rank.k, rank.n, r, p);
    return std::exp(-rho * p.noise_mw) * intra * inter_laplace(rho, scenario, p) *
           laplace_coexist(rho, p) * ordered_distance_pdf(r, rank.k, rank.n, a);
  };
  const double value = detail::integrate_adaptive(integrand, 0.0, a, rel_tol, "coverage_exact");
  return make_result(value, Method::ExactIntegral, scenario, gamma_th);
}

CoverageResult coverage_ordered_gc(double gamma_th, const Scenario& scenario,
                                   const LinkParams& p_in, const QuadratureSpec& quad) {
  check_threshold(gamma_th);
  if (!is_ordered(scenario))
    throw Error(ErrorCode::Domain, "coverage_ordered_gc needs an ordered scenario");
  const LinkParams p = effective_params(scenario, p_in);
  const RankPair rank = resolve_rank(scenario);
  const double tx = p.relative_interferer_power();
  const double rho_scale = std::pow(p.cluster_radius, p.alpha) * gamma_th / (p.typical_power_mw * p.eta);
  const double field = outer_field_coefficient(gamma_th, scenario, p);
  const double log_coeff =
      std::lgamma(rank.n + 1.0) - std::lgamma(rank.n - rank.k + 1.0) - std::lgamma(rank.k);
  const double coeff = std::exp(log_coeff);
  const bool random = is_random_size(scenario);

  // near-set terms do not depend on the outer node
  const double near_mean = gc_disc_mean(gamma_th / tx, p, quad.inner);
  double random_intra = 1.0;
  if (random) {
    const double mean = poisson_mean(scenario);
    if (mean > 1.0 && gamma_th > 0.0)
      random_intra = std::exp(-(mean - 1.0) * gc_disc_interference(gamma_th / tx, p, quad.inner));
  }

  double sum = 0.0;
  const ChebyshevRule& outer = quad.outer;
  for (int m = 0; m < outer.order; ++m) {
    const double l = outer.unit_node[m];
    const double la = std::pow(l, p.alpha);
    const double one_minus = 1.0 - l * l;
    const double density = coeff * std::pow(l, 2 * rank.k - 1) * std::pow(one_minus, rank.n - rank.k);
    double intra = random_intra;
    if (!random && gamma_th > 0.0) {
      intra = rank.k == 1 ? 1.0 : std::pow(near_mean, rank.k - 1);
      if (rank.k < rank.n) {
        const double far = (gc_disc_mean(la * gamma_th / tx, p, quad.inner) - l * l * near_mean) / one_minus;
        intra *= std::pow(std::clamp(far, 0.0, 1.0), rank.n - rank.k);
      }
    }
    sum += outer.sine[m] * density * std::exp(-la * rho_scale * p.noise_mw - l * l * field) * intra;
  }
  return make_result(outer.weight * sum, Method::GaussChebyshev, scenario, gamma_th);
}

CoverageResult coverage_exact(double gamma_th, const Scenario& scenario, const LinkParams& p,
                              double rel_tol) {
  if (is_ordered(scenario)) return coverage_ordered_exact(gamma_th, scenario, p, rel_tol);
  return coverage_unordered_exact(gamma_th, scenario, p, rel_tol);
}

CoverageResult coverage_gc(double gamma_th, const Scenario& scenario, const LinkParams& p,
                           const QuadratureSpec& quad) {
  if (is_ordered(scenario)) return coverage_ordered_gc(gamma_th, scenario, p, quad);
  return coverage_unordered_gc(gamma_th, scenario, p, quad);
}

}  // namespace lorasg
