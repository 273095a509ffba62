/*
 * monte_carlo.cpp
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

#include "lorasg/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "lorasg/error.hpp"

namespace lorasg {

namespace {

constexpr std::uint64_t kChunk = 512;

struct Totals {
  std::vector<double> sum;
  std::vector<double> sum_sq;
  std::uint64_t retries = 0;
};

// Neumaier summation over chunk totals, always in chunk order
class CompensatedSum {
 public:
  void add(double x) {
    const double t = total_ + x;
    if (std::abs(total_) >= std::abs(x))
      carry_ += (total_ - t) + x;
    else
      carry_ += (x - t) + total_;
    total_ = t;
  }
  double value() const { return total_ + carry_; }

 private:
  double total_ = 0.0;
  double carry_ = 0.0;
};

void check_spec(const SimSpec& spec) {
  if (spec.trials < 2) throw Error(ErrorCode::Domain, "Monte Carlo needs at least 2 trials");
  spec.config.link.validate();
  if (!(spec.config.window_radius > spec.config.link.cluster_radius))
    throw Error(ErrorCode::Domain, "window radius must exceed the cluster radius");
}

// body(trial, realization_buffer, totals) runs once per trial; chunks are reduced in order,
// so the result does not depend on the worker count.
template <class Body>
std::vector<McEstimate> run_trials(const SimSpec& spec, std::size_t width, Body&& body) {
  check_spec(spec);
  const std::uint64_t chunks = (spec.trials + kChunk - 1) / kChunk;
  std::vector<Totals> results(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    Realization buffer;
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        Totals t;
        t.sum.assign(width, 0.0);
        t.sum_sq.assign(width, 0.0);
        const std::uint64_t end = std::min(spec.trials, (c + 1) * kChunk);
        for (std::uint64_t trial = c * kChunk; trial < end; ++trial) body(trial, buffer, t);
        results[c] = std::move(t);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };

  unsigned workers = spec.workers ? spec.workers : default_worker_count();
  workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, workers), chunks));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<McEstimate> out(width);
  std::uint64_t retries = 0;
  for (const auto& t : results) retries += t.retries;
  const double n = static_cast<double>(spec.trials);
  for (std::size_t i = 0; i < width; ++i) {
    CompensatedSum sum;
    CompensatedSum sum_sq;
    for (const auto& t : results) {
      sum.add(t.sum[i]);
      sum_sq.add(t.sum_sq[i]);
    }
    const double mean = sum.value() / n;
    const double var = std::max(0.0, (sum_sq.value() - n * mean * mean) / (n - 1.0));
    out[i] = McEstimate{mean, std::sqrt(var / n), spec.trials, retries};
  }
  return out;
}

void sample_trial(const SimSpec& spec, std::uint64_t trial, Realization& buffer, Rng& fading) {
  Rng rng = make_stream(spec.seed, trial);
  sample_realization(spec.config, spec.scenario, rng, buffer);
  buffer.rng_seed = spec.seed;
  fading.seed(rng());
}

}  // namespace

unsigned default_worker_count() {
  if (const char* env = std::getenv("LORASG_WORKERS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value <= 1024) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

LinkSample sample_link(const Realization& realization, Rng& fading, const LinkParams& p,
                       Interference mode) {
  Rng coexist_fading(fading());
  const double e = -0.5 * p.alpha;
  auto gain = [e](double dx, double dy) { return std::pow(dx * dx + dy * dy, e); };

  LinkSample out;
  double intra = 0.0;
  const auto typical = realization.cluster(0);
  for (std::size_t i = 0; i < typical.size(); ++i) {
    const double g = exponential1(fading) * gain(typical[i].x, typical[i].y);
    if (i == realization.typical_node)
      out.signal = p.typical_power_mw * p.eta * g;
    else
      intra += g;
  }
  out.intra = p.interferer_power_mw * p.eta * intra;
  if (mode == Interference::IntraLimited) return out;

  double inter = 0.0;
  for (std::size_t j = 1; j < realization.cluster_count(); ++j) {
    const Point2D rx = realization.receivers[j];
    for (const Point2D& off : realization.cluster(j))
      inter += exponential1(fading) * gain(rx.x + off.x, rx.y + off.y);
  }
  out.inter = p.interferer_power_mw * p.eta * inter;

  double coexist = 0.0;
  for (const Point2D& z : realization.coexist_nodes) coexist += exponential1(coexist_fading) * gain(z.x, z.y);
  out.coexist = p.coexist_power_mw * p.eta * coexist;
  out.noise = p.noise_mw;
  return out;
}

double sinr_of_realization(const Realization& realization, Rng& fading, const LinkParams& p,
                           Interference mode) {
  return sample_link(realization, fading, p, mode).sinr();
}

std::vector<McEstimate> estimate_coverage(const SimSpec& spec) {
  if (spec.thresholds.empty()) throw Error(ErrorCode::Domain, "no SINR thresholds given");
  for (double th : spec.thresholds)
    if (!(th >= 0.0) || !std::isfinite(th))
      throw Error(ErrorCode::Domain, "SINR thresholds must be finite and >= 0");
  const bool tracing = !spec.trace_path.empty();
  std::vector<double> trace(tracing ? spec.trials : 0);
  const std::size_t width = spec.thresholds.size();

  auto body = [&](std::uint64_t trial, Realization& buffer, Totals& t) {
    Rng fading;
    sample_trial(spec, trial, buffer, fading);
    const double sinr = sinr_of_realization(buffer, fading, spec.config.link, spec.scenario.interference);
    for (std::size_t i = 0; i < width; ++i) {
      if (sinr >= spec.thresholds[i]) {
        t.sum[i] += 1.0;
        t.sum_sq[i] += 1.0;
      }
    }
    t.retries += buffer.conditioning_retries;
    if (tracing) trace[trial] = sinr;
  };
  auto estimates = run_trials(spec, width, body);

  if (tracing) {
    std::ofstream os(spec.trace_path);
    if (!os) throw Error(ErrorCode::Io, "cannot open trace file " + spec.trace_path);
    os << "trial,sinr,covered\n";
    char line[96];
    for (std::uint64_t i = 0; i < spec.trials; ++i) {
      std::snprintf(line, sizeof line, "%llu,%.10g,%d\n", static_cast<unsigned long long>(i),
                    trace[i], trace[i] >= spec.thresholds.front() ? 1 : 0);
      os << line;
    }
    if (!os) throw Error(ErrorCode::Io, "failed writing trace file " + spec.trace_path);
  }
  return estimates;
}

std::vector<McEstimate> estimate_laplace(const SimSpec& spec, Field field,
                                         std::span<const double> s_grid) {
  if (s_grid.empty()) throw Error(ErrorCode::Domain, "empty s grid");
  for (double s : s_grid)
    if (!(s >= 0.0) || !std::isfinite(s)) throw Error(ErrorCode::Domain, "s must be finite and >= 0");
  if (field != Field::Intra && spec.scenario.interference == Interference::IntraLimited)
    throw Error(ErrorCode::Domain, "intra-limited scenarios carry no inter or coexisting field");
  const std::size_t width = s_grid.size();

  auto body = [&](std::uint64_t trial, Realization& buffer, Totals& t) {
    Rng fading;
    sample_trial(spec, trial, buffer, fading);
    const LinkSample link = sample_link(buffer, fading, spec.config.link, spec.scenario.interference);
    const double level = field == Field::Intra ? link.intra
                         : field == Field::Inter ? link.inter
                                                 : link.coexist;
    for (std::size_t i = 0; i < width; ++i) {
      const double v = std::exp(-s_grid[i] * level);
      t.sum[i] += v;
      t.sum_sq[i] += v * v;
    }
    t.retries += buffer.conditioning_retries;
  };
  return run_trials(spec, width, body);
}

CoverageResult to_coverage_result(const McEstimate& estimate, double gamma_th) {
  CoverageResult r;
  r.value = estimate.mean;
  r.method = Method::MonteCarlo;
  r.bound_side = BoundSide::Estimate;
  r.ci_halfwidth = estimate.ci95_halfwidth();
  r.gamma_th = gamma_th;
  return r;
}

std::vector<MetricResult> estimate_metrics(const SimSpec& spec) {
  const auto estimates = estimate_coverage(spec);
  std::vector<MetricResult> out;
  const LinkParams& p = spec.config.link;
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    out.push_back(evaluate_metrics(mean_cluster_size(spec.scenario.size), p.receiver_density,
                                   p.typical_power_mw,
                                   to_coverage_result(estimates[i], spec.thresholds[i])));
  }
  return out;
}

}  // namespace lorasg
