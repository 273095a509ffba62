/*
 * point_process.cpp
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

#include "lorasg/point_process.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

#include <json.hpp>

#include "lorasg/error.hpp"

namespace lorasg {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double log_factorial(int n) { return std::lgamma(n + 1.0); }

void check_radius(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw Error(ErrorCode::Domain, "cluster radius must be positive");
}

// rank of each node when sorted by distance, returns index of rank k (1-based)
std::size_t index_of_rank(std::span<const Point2D> nodes, int k) {
  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::nth_element(order.begin(), order.begin() + (k - 1), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     const double da = nodes[a].norm2();
                     const double db = nodes[b].norm2();
                     return da < db || (da == db && a < b);
                   });
  return order[k - 1];
}

int required_rank(const Scenario& scenario, int size) {
  if (const auto* rank = std::get_if<OrderedRank>(&scenario.ordering)) return rank->k;
  if (std::holds_alternative<Farthest>(scenario.ordering)) return size;
  return 1;
}
}  // namespace

Rng make_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Point2D uniform_in_disc(double radius, Rng& rng) {
  const double r = radius * std::sqrt(uniform01(rng));
  const double theta = kTwoPi * uniform01(rng);
  return {r * std::cos(theta), r * std::sin(theta)};
}

std::vector<Point2D> sample_ppp(double density, double window_radius, Rng& rng) {
  if (!(density >= 0.0) || !std::isfinite(density))
    throw Error(ErrorCode::Domain, "sample_ppp: density must be non-negative");
  if (!(window_radius > 0.0) || !std::isfinite(window_radius))
    throw Error(ErrorCode::Domain, "sample_ppp: window radius must be positive");
  std::vector<Point2D> points;
  if (density == 0.0) return points;
  // pi density r_k^2 are the arrival times of a unit-rate Poisson process
  const double scale = 1.0 / (std::numbers::pi * density);
  double arrival = 0.0;
  for (;;) {
    arrival += exponential1(rng);
    const double r = std::sqrt(arrival * scale);
    if (r > window_radius) break;
    const double theta = kTwoPi * uniform01(rng);
    points.push_back({r * std::cos(theta), r * std::sin(theta)});
  }
  return points;
}

int draw_cluster_size(const ClusterSizeModel& size, Rng& rng) {
  if (const auto* fixed = std::get_if<FixedSize>(&size)) {
    if (fixed->n < 1) throw Error(ErrorCode::Domain, "fixed cluster size must be >= 1");
    return fixed->n;
  }
  const double mean = std::get<PoissonSize>(size).mean;
  if (!(mean >= 0.0) || !std::isfinite(mean))
    throw Error(ErrorCode::Domain, "Poisson cluster mean must be non-negative");
  if (mean == 0.0) return 0;
  return std::poisson_distribution<int>(mean)(rng);
}

std::vector<Point2D> sample_cluster(const ClusterSizeModel& size, double radius, Rng& rng) {
  check_radius(radius);
  const int count = draw_cluster_size(size, rng);
  std::vector<Point2D> nodes;
  nodes.reserve(count);
  for (int i = 0; i < count; ++i) nodes.push_back(uniform_in_disc(radius, rng));
  return nodes;
}

double unordered_distance_pdf(double r, double radius) {
  check_radius(radius);
  if (r < 0.0 || r > radius) return 0.0;
  return 2.0 * r / (radius * radius);
}

double ordered_distance_pdf(double r, int k, int n, double radius) {
  check_radius(radius);
  if (n < 1 || k < 1 || k > n)
    throw Error(ErrorCode::Domain, "ordered_distance_pdf: need 1 <= k <= n");
  if (r < 0.0 || r > radius) return 0.0;
  const double cdf = (r / radius) * (r / radius);
  const double log_coeff = log_factorial(n) - log_factorial(n - k) - log_factorial(k - 1);
  const double near = k == 1 ? 1.0 : std::pow(cdf, k - 1);
  const double far = n == k ? 1.0 : std::pow(1.0 - cdf, n - k);
  return std::exp(log_coeff) * near * far * 2.0 * r / (radius * radius);
}

ConditionalPdf conditional_interferer_pdf(double r, double rank_distance, double radius) {
  check_radius(radius);
  if (!(rank_distance > 0.0) || rank_distance > radius)
    throw Error(ErrorCode::Domain, "conditional_interferer_pdf: need 0 < r_k <= a");
  ConditionalPdf pdf;
  pdf.far_empty = rank_distance >= radius;
  if (r >= 0.0 && r <= rank_distance) pdf.near = 2.0 * r / (rank_distance * rank_distance);
  if (!pdf.far_empty && r >= rank_distance && r <= radius)
    pdf.far = 2.0 * r / (radius * radius - rank_distance * rank_distance);
  return pdf;
}

void Realization::clear() {
  receivers.clear();
  node_offsets.clear();
  cluster_start.clear();
  coexist_nodes.clear();
  typical_node = 0;
  conditioning_retries = 0;
}

void sample_realization(const NetworkConfig& config, const Scenario& scenario, Rng& rng,
                        Realization& out) {
  const LinkParams& link = config.link;
  check_radius(link.cluster_radius);
  if (!(config.window_radius > 0.0))
    throw Error(ErrorCode::Domain, "window radius must be positive");
  out.clear();
  const double a = link.cluster_radius;

  // typical cluster
  int size = 0;
  if (const auto* fixed = std::get_if<FixedSize>(&scenario.size)) {
    size = fixed->n;
    if (size < 1) throw Error(ErrorCode::Domain, "fixed cluster size must be >= 1");
    if (required_rank(scenario, size) > size)
      throw Error(ErrorCode::Domain, "requested rank exceeds the fixed cluster size");
  } else {
    const double mean = std::get<PoissonSize>(scenario.size).mean;
    if (!(mean >= 1.0)) throw Error(ErrorCode::Domain, "Poisson cluster mean must be >= 1");
    const bool shifted = config.typical_rule == TypicalClusterRule::Shifted;
    const ClusterSizeModel others = PoissonSize{shifted ? mean - 1.0 : mean};
    for (std::uint64_t attempt = 0;; ++attempt) {
      if (attempt > 1000000)
        throw Error(ErrorCode::Degenerate, "typical cluster rank cannot be satisfied");
      size = draw_cluster_size(others, rng) + (shifted ? 1 : 0);
      if (size >= 1 && required_rank(scenario, size) <= size) break;
      ++out.conditioning_retries;
    }
  }
  out.receivers.push_back({0.0, 0.0});
  out.cluster_start.push_back(0);
  for (int i = 0; i < size; ++i) out.node_offsets.push_back(uniform_in_disc(a, rng));
  out.cluster_start.push_back(out.node_offsets.size());

  const auto typical = out.cluster(0);
  if (std::holds_alternative<Unordered>(scenario.ordering)) {
    out.typical_node = std::uniform_int_distribution<std::size_t>(0, typical.size() - 1)(rng);
  } else {
    out.typical_node = index_of_rank(typical, required_rank(scenario, size));
  }

  if (scenario.interference == Interference::IntraLimited) return;

  // coexisting nodes get their own stream so the receiver field below stays aligned
  Rng coexist_rng(rng());
  out.coexist_nodes = sample_ppp(link.coexist_density, config.window_radius, coexist_rng);

  // receivers in radial order, each followed by its own cluster
  if (link.receiver_density > 0.0) {
    const double scale = 1.0 / (std::numbers::pi * link.receiver_density);
    double arrival = 0.0;
    for (;;) {
      arrival += exponential1(rng);
      const double r = std::sqrt(arrival * scale);
      if (r > config.window_radius) break;
      const double theta = kTwoPi * uniform01(rng);
      out.receivers.push_back({r * std::cos(theta), r * std::sin(theta)});
      const int count = draw_cluster_size(scenario.size, rng);
      for (int i = 0; i < count; ++i) out.node_offsets.push_back(uniform_in_disc(a, rng));
      out.cluster_start.push_back(out.node_offsets.size());
    }
  }
}

Realization sample_realization(const NetworkConfig& config, const Scenario& scenario, Rng& rng) {
  Realization out;
  sample_realization(config, scenario, rng, out);
  return out;
}

std::string realization_to_json(const Realization& realization) {
  using nlohmann::json;
  auto points = [](std::span<const Point2D> pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back({p.x, p.y});
    return arr;
  };
  json clusters = json::array();
  for (std::size_t i = 0; i < realization.cluster_count(); ++i) {
    clusters.push_back({{"receiver", {realization.receivers[i].x, realization.receivers[i].y}},
                        {"offsets", points(realization.cluster(i))}});
  }
  json doc = {
      {"rng_seed", realization.rng_seed},
      {"typical", {{"cluster", 0}, {"node", realization.typical_node}}},
      {"conditioning_retries", realization.conditioning_retries},
      {"clusters", clusters},
      {"coexist_nodes", points(realization.coexist_nodes)},
  };
  return doc.dump(2);
}

}  // namespace lorasg
