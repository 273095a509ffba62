/*
 * point_process.hpp
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
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lorasg/network.hpp"

namespace lorasg {

using Rng = std::mt19937_64;

// Independent stream for (seed, index); used per Monte Carlo trial.
Rng make_stream(std::uint64_t seed, std::uint64_t index);

// top 53 bits of one engine output, uniform on [0, 1)
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
inline double exponential1(Rng& rng) { return -std::log1p(-uniform01(rng)); }

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  double norm() const { return std::hypot(x, y); }
  double norm2() const { return x * x + y * y; }
};

// Homogeneous PPP on the disc of radius window_radius around the origin.
// Points come out in order of increasing distance, so a larger window
// driven by the same stream contains the smaller window's points.
std::vector<Point2D> sample_ppp(double density, double window_radius, Rng& rng);

Point2D uniform_in_disc(double radius, Rng& rng);
int draw_cluster_size(const ClusterSizeModel& size, Rng& rng);
std::vector<Point2D> sample_cluster(const ClusterSizeModel& size, double radius, Rng& rng);

double unordered_distance_pdf(double r, double radius);
// density of the k-th closest of n i.i.d. uniform points in the disc
double ordered_distance_pdf(double r, int k, int n, double radius);

// Distance law of the remaining n-1 nodes given the rank-k distance r_k:
// near nodes are uniform on [0, r_k], far nodes uniform on the annulus [r_k, a].
struct ConditionalPdf {
  double near = 0.0;
  double far = 0.0;
  bool far_empty = false;
};
ConditionalPdf conditional_interferer_pdf(double r, double rank_distance, double radius);

struct Realization {
  // receivers[0] is the typical receiver at the origin
  std::vector<Point2D> receivers;
  // node offsets relative to their receiver, cluster i at [cluster_start[i], cluster_start[i+1])
  std::vector<Point2D> node_offsets;
  std::vector<std::size_t> cluster_start;
  std::vector<Point2D> coexist_nodes;
  std::size_t typical_node = 0;  // index within cluster 0
  std::uint64_t rng_seed = 0;
  std::uint64_t conditioning_retries = 0;

  std::size_t cluster_count() const { return receivers.size(); }
  std::span<const Point2D> cluster(std::size_t i) const {
    return {node_offsets.data() + cluster_start[i], cluster_start[i + 1] - cluster_start[i]};
  }
  void clear();
};

void sample_realization(const NetworkConfig& config, const Scenario& scenario, Rng& rng,
                        Realization& out);
Realization sample_realization(const NetworkConfig& config, const Scenario& scenario, Rng& rng);

std::string realization_to_json(const Realization& realization);

}  // namespace lorasg
