/*
 * test_coverage.cpp
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

#include <doctest.h>

#include <cmath>

#include "lorasg/coverage.hpp"
#include "lorasg/error.hpp"
#include "lorasg/laplace.hpp"
#include "test_support.hpp"

using namespace lorasg;

namespace {

double db(double x) { return db_to_linear(x); }

Scenario uf(int n) { return {Unordered{}, FixedSize{n}, Interference::Full}; }
Scenario ur(double mean) { return {Unordered{}, PoissonSize{mean}, Interference::Full}; }
Scenario of(int n) { return {Farthest{}, FixedSize{n}, Interference::Full}; }
Scenario of_rank(int k, int n) { return {OrderedRank{k}, FixedSize{n}, Interference::Full}; }
Scenario orr(double mean) { return {Farthest{}, PoissonSize{mean}, Interference::Full}; }

struct Frozen {
  const char* name;
  Scenario scenario;
  double gamma_db;
  double value;
};

}  // namespace

TEST_CASE("exact coverage reproduces frozen reference values") {
  // reference values from 30-digit quadrature of the same model
  const Frozen table[] = {
      {"uf n6", uf(6), -10.0, 0.3630329426910801},
      {"ur n6", ur(6.0), -10.0, 0.37599061915511848},
      {"of n6", of(6), -10.0, 0.086854985175330426},
      {"or n6", orr(6.0), -10.0, 0.1196462631435337},
      {"of k3 n6", of_rank(3, 6), -10.0, 0.32443765088429329},
      {"ur 4.5", ur(4.5), -10.0, 0.47891575307666089},
      {"or 4.5", orr(4.5), -10.0, 0.22167646073426047},
      {"uf n6", uf(6), 0.0, 0.10731148960144672},
      {"ur n6", ur(6.0), 0.0, 0.12231171402445568},
      {"of n6", of(6), 0.0, 0.00033803792932003333},
      {"or n6", orr(6.0), 0.0, 0.0068438617256813505},
      {"of k3 n6", of_rank(3, 6), 0.0, 0.014975190673578959},
      {"ur 4.5", ur(4.5), 0.0, 0.18225177696895046},
      {"or 4.5", orr(4.5), 0.0, 0.028090128078359204},
  };
  const LinkParams p = testing::fig2_link();
  for (const auto& row : table) {
    CAPTURE(row.name);
    CAPTURE(row.gamma_db);
    const CoverageResult r = coverage_exact(db(row.gamma_db), row.scenario, p, 1e-11);
    CHECK(testing::rel_diff(r.value, row.value) < 1e-9);
    CHECK(r.method == Method::ExactIntegral);
    CHECK(r.gamma_th == doctest::Approx(db(row.gamma_db)));
  }
}

TEST_CASE("Gauss-Chebyshev coverage tracks the exact integral") {
  const LinkParams p = testing::fig2_link();
  const Scenario scenarios[] = {uf(6), ur(6.0), of(6), orr(6.0), of_rank(2, 6), ur(4.5), orr(4.5)};
  const QuadratureSpec quad = make_quadrature(50, 50);
  for (const auto& sc : scenarios) {
    for (double g = -20.0; g <= 10.0; g += 2.0) {
      CAPTURE(scenario_tag(sc));
      CAPTURE(g);
      const double exact = coverage_exact(db(g), sc, p).value;
      const double gc = coverage_gc(db(g), sc, p, quad).value;
      CHECK(std::abs(gc - exact) <= 1e-3);
    }
  }
  // refinement shrinks the gap
  const double exact = coverage_exact(db(-6.0), uf(6), p, 1e-10).value;
  const double coarse = std::abs(coverage_gc(db(-6.0), uf(6), p, make_quadrature(10, 10)).value - exact);
  const double fine = std::abs(coverage_gc(db(-6.0), uf(6), p, make_quadrature(200, 200)).value - exact);
  CHECK(fine < coarse);
  CHECK(fine < 1e-4);
}

TEST_CASE("method and bound labels") {
  const LinkParams p = testing::fig2_link();
  const QuadratureSpec quad = make_quadrature(20, 20);
  CHECK(coverage_exact(0.1, uf(6), p).bound_side == BoundSide::UpperBound);
  CHECK(coverage_exact(0.1, of(6), p).bound_side == BoundSide::UpperBound);
  CHECK(coverage_exact(0.1, ur(6), p).bound_side == BoundSide::LowerBound);
  CHECK(coverage_gc(0.1, orr(6), p, quad).bound_side == BoundSide::LowerBound);
  CHECK(coverage_gc(0.1, uf(6), p, quad).method == Method::GaussChebyshev);
  CHECK_FALSE(coverage_gc(0.1, uf(6), p, quad).ci_halfwidth.has_value());
  CHECK(coverage_intra_limited(0.1, uf(6), p, quad).bound_side == BoundSide::Exact);
  CHECK(std::string(to_string(Method::ExactIntegral)) == "exact");
  CHECK(std::string(to_string(Method::GaussChebyshev)) == "gc");
  CHECK(std::string(to_string(Method::MonteCarlo)) == "mc");
  CHECK(std::string(to_string(BoundSide::UpperBound)) == "upper");
  CHECK(std::string(to_string(BoundSide::LowerBound)) == "lower");
  CHECK(std::string(to_string(BoundSide::Exact)) == "exact");
  CHECK(std::string(to_string(BoundSide::Estimate)) == "estimate");
}

TEST_CASE("intra-limited coverage does not depend on the cluster radius") {
  LinkParams p = testing::fig2_link();
  const QuadratureSpec quad = make_quadrature(50, 50);
  const Scenario scenarios[] = {uf(4), ur(4.5), of(6), of_rank(2, 5), orr(3.5)};
  for (const auto& sc : scenarios) {
    for (double g : {-10.0, 0.0, 6.0}) {
      p.cluster_radius = 100.0;
      const double small = coverage_intra_limited(db(g), sc, p, quad).value;
      p.cluster_radius = 1000.0;
      const double large = coverage_intra_limited(db(g), sc, p, quad).value;
      p.cluster_radius = 500.0;
      const double exact = coverage_exact(db(g), Scenario{sc.ordering, sc.size, Interference::IntraLimited}, p).value;
      CAPTURE(scenario_tag(sc));
      CHECK(std::abs(small - large) < 1e-10);
      CHECK(std::abs(small - exact) < 1e-3);
    }
  }
}

TEST_CASE("two-node intra-limited coverage equals a double integral") {
  // signal and interferer uniform on the unit disc, equal powers
  LinkParams p = testing::fig2_link();
  p.typical_power_mw = p.interferer_power_mw;
  const Scenario sc{Unordered{}, FixedSize{2}, Interference::IntraLimited};
  for (double g : {0.1, 1.0, 3.0}) {
    auto inner = [&](double r) {
      return testing::legendre([&](double u) { return 2.0 * u / (1.0 + g * std::pow(r / u, p.alpha)); }, 0.0, 1.0, 30);
    };
    const double oracle = testing::legendre([&](double r) { return 2.0 * r * inner(r); }, 0.0, 1.0, 30);
    CHECK(coverage_exact(g, sc, p, 1e-10).value == doctest::Approx(oracle).epsilon(1e-8));
  }
}

TEST_CASE("GC coverage equals the GC Laplace product over the outer rule") {
  const LinkParams p = testing::fig2_link();
  const QuadratureSpec quad = make_quadrature(30, 40);
  const double a = p.cluster_radius;
  const int n = 6;
  const double g = db(-4.0);
  double sum = 0.0;
  for (int j = 0; j < quad.outer.order; ++j) {
    const double l = quad.outer.unit_node[j];
    const double r = l * a;
    const double s = g * std::pow(r, p.alpha) / (p.typical_power_mw * p.eta);
    const double term = laplace_intra_fixed_gc(s, n, p, quad) * laplace_inter_fixed_upper(s, n, p) *
                        laplace_coexist(s, p) * std::exp(-s * p.noise_mw);
    sum += quad.outer.sine[j] * l * term;
  }
  CHECK(coverage_gc(g, uf(n), p, quad).value == doctest::Approx(quad.outer.weight * sum).epsilon(1e-10));
}

TEST_CASE("coverage orderings") {
  const LinkParams p = testing::fig2_link();
  const QuadratureSpec quad = make_quadrature(50, 50);
  LinkParams quiet = p;
  quiet.noise_mw = 0.0;
  double last = 1.0;
  for (double g = -20.0; g <= 10.0; g += 1.0) {
    const double v = coverage_exact(db(g), uf(6), p).value;
    CHECK(v <= last);
    CHECK(v >= 0.0);
    last = v;
    CHECK(v >= coverage_exact(db(g), of(6), p).value);
    CHECK(coverage_exact(db(g), uf(6), quiet).value >= v);
    for (const auto& sc : {ur(6.0), of(6), orr(6.0)}) {
      const double gc = coverage_gc(db(g), sc, p, quad).value;
      CHECK(gc >= 0.0);
      CHECK(gc <= 1.0);
    }
  }
  // the closest node sees the best link
  for (int k = 1; k < 6; ++k)
    CHECK(coverage_exact(db(-6.0), of_rank(k, 6), p).value >= coverage_exact(db(-6.0), of_rank(k + 1, 6), p).value);
  // larger clusters mean more interference
  for (int n = 1; n < 10; ++n)
    CHECK(coverage_exact(db(-6.0), uf(n), p).value >= coverage_exact(db(-6.0), uf(n + 1), p).value);
  CHECK(coverage_exact(0.0, uf(6), p).value == doctest::Approx(1.0));
}

TEST_CASE("rank resolution") {
  CHECK(resolve_rank(of(6)).k == 6);
  CHECK(resolve_rank(of_rank(2, 6)).k == 2);
  CHECK(resolve_rank(orr(4.5)).n == 5);
  CHECK(resolve_rank(orr(4.5)).k == 5);
  CHECK(resolve_rank(orr(4.0)).n == 4);
  CHECK_THROWS_AS(resolve_rank(of_rank(7, 6)), Error);
  CHECK_THROWS_AS(resolve_rank(Scenario{OrderedRank{2}, PoissonSize{4.5}, Interference::Full}), Error);
}

TEST_CASE("coverage argument checks") {
  const LinkParams p = testing::fig2_link();
  const QuadratureSpec quad = make_quadrature(10, 10);
  CHECK_THROWS_AS(coverage_exact(-0.1, uf(6), p), Error);
  CHECK_THROWS_AS(coverage_exact(std::nan(""), uf(6), p), Error);
  CHECK_THROWS_AS(coverage_unordered_exact(0.1, of(6), p), Error);
  CHECK_THROWS_AS(coverage_ordered_gc(0.1, uf(6), p, quad), Error);
  CHECK_THROWS_AS(coverage_gc(0.1, uf(0), p, quad), Error);
  CHECK_THROWS_AS(coverage_gc(0.1, ur(0.5), p, quad), Error);
  LinkParams bad = p;
  bad.alpha = 1.9;
  CHECK_THROWS_AS(coverage_exact(0.1, uf(6), bad), Error);
}
