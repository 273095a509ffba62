/*
 * test_special_functions.cpp
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
#include <limits>
#include <numbers>
#include <random>

#include "lorasg/error.hpp"
#include "lorasg/special_functions.hpp"
#include "test_support.hpp"

using namespace lorasg;

namespace {

struct HypCase {
  double b, z, expected;
};

// mpmath.hyp2f1(1, b, b + 1, -z) at 30 digits
const HypCase kHypCases[] = {
    {0.25, 0.0001, 0.99998000111103419392},  {0.25, 0.49, 0.92206373543763388826},
    {0.25, 0.5, 0.92078833330740879587},     {0.25, 0.51, 0.9195224743906359164},
    {0.25, 1.99, 0.79526223913183472126},    {0.25, 2, 0.79468443992281951386},
    {0.25, 2.01, 0.7941088561439316098},     {0.25, 37, 0.44144802192566284802},
    {0.25, 1000, 0.19718399068647343362},    {0.25, 1e8, 0.01110720401206259657},
    {0.25, 1e15, 0.00019751718125317305331},
    {0.5714285714285714, 0.0001, 0.99996363858569859836},
    {0.5714285714285714, 0.49, 0.86150459055777146782},
    {0.5714285714285714, 0.5, 0.85929389404572354137},
    {0.5714285714285714, 0.51, 0.85710159290914018138},
    {0.5714285714285714, 1.99, 0.6515187617831493671},
    {0.5714285714285714, 2, 0.65061027731291470056},
    {0.5714285714285714, 2.01, 0.64970574080954981202},
    {0.5714285714285714, 37, 0.19814826527293791142},
    {0.5714285714285714, 1000, 0.034218212466168224113},
    {0.5714285714285714, 1e8, 0.000049384823901625307644},
    {0.5714285714285714, 1e15, 4.9398143901585330391e-9},
    {1, 0.0001, 0.99995000333308335333},     {1, 0.49, 0.81382881623952606726},
    {1, 0.5, 0.81093021621632876396},        {1, 0.51, 0.80805813887614306031},
    {1, 1.99, 0.55038863688572616021},       {1, 2, 0.5493061443340548457},
    {1, 2.01, 0.54822889490586286594},       {1, 37, 0.098313139452064480255},
    {1, 1000, 0.0069087547793152205852},     {1, 1e8, 1.8420680753952365422e-7},
    {1, 1e15, 3.453877639491068626e-14},
    {1.5714285714285714, 0.0001, 0.99993889328854516709},
    {1.5714285714285714, 0.49, 0.77727015503291525638},
    {1.5714285714285714, 0.5, 0.77388358274852054711},
    {1.5714285714285714, 0.51, 0.77053062647032257589},
    {1.5714285714285714, 1.99, 0.48156955029966797536},
    {1.5714285714285714, 2, 0.48041086869474230202},
    {1.5714285714285714, 2.01, 0.4792583148128049988},
    {1.5714285714285714, 37, 0.059597088391876238209},
    {1.5714285714285714, 1000, 0.0026558999157180374682},
    {1.5714285714285714, 1e8, 2.7498641917342706179e-8},
    {1.5714285714285714, 1e15, 2.7499999864155105146e-15},
    {2.5, 0.0001, 0.99992857698367247713},   {2.5, 0.49, 0.74550180646581632287},
    {2.5, 0.5, 0.7417283606753972828},       {2.5, 0.51, 0.7379954099003750615},
    {2.5, 1.99, 0.42890515332115247267},     {2.5, 2, 0.4277219069033832871},
    {2.5, 2.01, 0.42654541915633326376},     {2.5, 37, 0.04223806882632499079},
    {2.5, 1000, 0.0016619100330389789496},   {2.5, 1e8, 1.6666666166745201483e-8},
    {2.5, 1e15, 1.6666666666666616667e-15},
    {7.3, 0.0001, 0.99991205604152477666},   {7.3, 0.49, 0.69981762899162786659},
    {7.3, 0.5, 0.69557153354409501319},      {7.3, 0.51, 0.69137708953492268193},
    {7.3, 1.99, 0.36609334395158900768},     {7.3, 2, 0.36493617127945831712},
    {7.3, 2.01, 0.36378631352467197402},     {7.3, 37, 0.030343304958824098891},
    {7.3, 1000, 0.0011573544957050584034},   {7.3, 1e8, 1.1587301449565739943e-8},
    {7.3, 1e15, 1.1587301587301573528e-15},
};

}  // namespace

TEST_CASE("hyp2f1_1_b matches arbitrary-precision values across all branches") {
  for (const auto& c : kHypCases) {
    CAPTURE(c.b);
    CAPTURE(c.z);
    CHECK(testing::rel_diff(hyp2f1_1_b(c.b, c.z), c.expected) < 1e-10);
  }
}

TEST_CASE("hyp2f1_1_b edge values and domain") {
  CHECK(hyp2f1_1_b(0.3, 0.0) == 1.0);
  CHECK(hyp2f1_1_b(0.3, std::numeric_limits<double>::infinity()) == 0.0);
  CHECK_THROWS_AS(hyp2f1_1_b(0.0, 1.0), Error);
  CHECK_THROWS_AS(hyp2f1_1_b(-1.0, 1.0), Error);
  CHECK_THROWS_AS(hyp2f1_1_b(0.5, -1e-3), Error);
  CHECK_THROWS_AS(hyp2f1_1_b(0.5, std::nan("")), Error);
  try {
    hyp2f1_1_b(0.5, -1.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Domain);
  }
}

TEST_CASE("hyp2f1_1_b at integer b reduces to elementary forms") {
  for (double z : {1e-6, 0.3, 0.9, 3.0, 50.0, 1e6}) {
    CAPTURE(z);
    CHECK(testing::rel_diff(hyp2f1_1_b(1.0, z), std::log1p(z) / z) < 1e-13);
    // b = 2: 2 (z - log(1 + z)) / z^2
    const double two = 2.0 * (z - std::log1p(z)) / (z * z);
    if (z > 1e-3) CHECK(testing::rel_diff(hyp2f1_1_b(2.0, z), two) < 1e-9);
  }
}

TEST_CASE("hyp2f1_1_b is continuous as b approaches an integer") {
  for (double z : {3.0, 40.0, 1e5}) {
    const double at_one = hyp2f1_1_b(1.0, z);
    for (double eps : {1e-2, 1e-4, 1e-7, 1e-10}) {
      CAPTURE(z);
      CAPTURE(eps);
      // dF/db is bounded by log(z) F here, so the gap scales with eps
      CHECK(std::abs(hyp2f1_1_b(1.0 - eps, z) - at_one) <= 2.0 * eps * std::log(z) * at_one + 1e-15);
      CHECK(std::abs(hyp2f1_1_b(1.0 + eps, z) - at_one) <= 2.0 * eps * std::log(z) * at_one + 1e-15);
    }
  }
}

TEST_CASE("property: hyp2f1_1_b lies in (0, 1] and decreases in z") {
  std::mt19937_64 rng(20261015);
  std::uniform_real_distribution<double> b_dist(1e-3, 12.0);
  std::uniform_real_distribution<double> log_z(-6.0, 14.0);
  for (int i = 0; i < 400; ++i) {
    const double b = b_dist(rng);
    const double z1 = std::pow(10.0, log_z(rng));
    const double z2 = z1 * (1.0 + std::uniform_real_distribution<double>(1e-3, 3.0)(rng));
    const double f1 = hyp2f1_1_b(b, z1);
    const double f2 = hyp2f1_1_b(b, z2);
    CAPTURE(b);
    CAPTURE(z1);
    CHECK(f1 > 0.0);
    CHECK(f1 <= 1.0);
    CHECK(f2 <= f1);
  }
}

TEST_CASE("property: z delta/(delta+1) F_(delta+1)(z) == 1 - F_delta(z)") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d_dist(0.05, 0.95);
  std::uniform_real_distribution<double> log_z(-6.0, 12.0);
  for (int i = 0; i < 400; ++i) {
    const double delta = d_dist(rng);
    const double z = std::pow(10.0, log_z(rng));
    const double lhs = z * delta / (delta + 1.0) * hyp2f1_1_b(delta + 1.0, z);
    const double rhs = 1.0 - hyp2f1_1_b(delta, z);
    CAPTURE(delta);
    CAPTURE(z);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)) + 1e-15);
  }
}

TEST_CASE("hyp2f1_1_b agrees with its integral representation") {
  for (double b : {0.2, 0.5714285714285714, 1.3, 4.0}) {
    for (double z : {0.1, 0.8, 5.0, 300.0}) {
      // t = u^(1/b) removes the endpoint singularity: F = int_0^1 du / (1 + z u^(1/b))
      const double ref = testing::legendre([&](double u) { return 1.0 / (1.0 + z * std::pow(u, 1.0 / b)); }, 0.0, 1.0);
      CAPTURE(b);
      CAPTURE(z);
      CHECK(testing::rel_diff(hyp2f1_1_b(b, z), ref) < 1e-10);
    }
  }
}

TEST_CASE("gamma and beta match arbitrary-precision values") {
  // mpmath at 30 digits
  CHECK(testing::rel_diff(gamma_fn(0.5), 1.7724538509055160273) < 1e-13);
  CHECK(testing::rel_diff(gamma_fn(1.5714285714285714), 0.89061773308712857358) < 1e-13);
  CHECK(testing::rel_diff(gamma_fn(0.4285714285714286), 2.0675117265602292133) < 1e-13);
  CHECK(testing::rel_diff(gamma_fn(7.25), 1155.3810139199896872) < 1e-13);
  CHECK(testing::rel_diff(beta_fn(0.5, 0.5), std::numbers::pi) < 1e-13);
  CHECK(testing::rel_diff(beta_fn(0.4285714285714286, 5.571428571428571), 1.0123276306926143503) < 1e-12);
  CHECK(testing::rel_diff(beta_fn(3.25, 1.75), 0.097621939559143789607) < 1e-12);
  CHECK(testing::rel_diff(beta_fn(12.5, 20.25), 3.1762635740922328669e-10) < 1e-11);
}

TEST_CASE("property: gamma recurrence and beta symmetry") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(0.05, 25.0);
  for (int i = 0; i < 300; ++i) {
    const double x = dist(rng);
    const double y = dist(rng);
    CHECK(testing::rel_diff(gamma_fn(x + 1.0), x * gamma_fn(x)) < 1e-12);
    CHECK(testing::rel_diff(beta_fn(x, y), beta_fn(y, x)) < 1e-14);
    CHECK(testing::rel_diff(beta_fn(x, y), gamma_fn(x) * gamma_fn(y) / gamma_fn(x + y)) < 1e-10);
  }
}

TEST_CASE("gamma and beta reject non-positive arguments") {
  CHECK_THROWS_AS(gamma_fn(0.0), Error);
  CHECK_THROWS_AS(gamma_fn(-0.5), Error);
  CHECK_THROWS_AS(gamma_fn(200.0), Error);
  CHECK_THROWS_AS(beta_fn(0.0, 1.0), Error);
  CHECK_THROWS_AS(beta_fn(1.0, -2.0), Error);
}

TEST_CASE("Chebyshev rule structure") {
  for (int order : {1, 2, 5, 30, 50, 51}) {
    const ChebyshevRule rule = make_chebyshev_rule(order);
    CAPTURE(order);
    CHECK(rule.weight == doctest::Approx(std::numbers::pi / order).epsilon(1e-15));
    REQUIRE(rule.node.size() == static_cast<std::size_t>(order));
    for (int t = 0; t < order; ++t) {
      CHECK(rule.node[t] == -rule.node[order - 1 - t]);
      // sqrt(1 - x^2) itself loses a few ulp near |x| -> 1
      CHECK(std::abs(rule.sine[t] - std::sqrt(1.0 - rule.node[t] * rule.node[t])) < 4e-15);
      CHECK(std::abs(rule.unit_node[t] - (rule.node[t] + 1.0) / 2.0) < 1e-15);
      CHECK(rule.unit_node[t] > 0.0);
      CHECK(rule.unit_node[t] < 1.0);
    }
  }
  CHECK_THROWS_AS(make_chebyshev_rule(0), Error);
}

TEST_CASE("Chebyshev rule weight identities") {
  for (int order : {10, 30, 50}) {
    const ChebyshevRule rule = make_chebyshev_rule(order);
    double sum_mu = 0.0;
    double sum_mu2 = 0.0;
    for (double s : rule.sine) {
      sum_mu += s;
      sum_mu2 += s * s;
    }
    CAPTURE(order);
    // f = 1 in omega sum mu_t f(c_t) approximates the length 2 of [-1, 1]
    CHECK(std::abs(rule.weight * sum_mu - std::numbers::pi / (order * std::sin(std::numbers::pi / (2.0 * order)))) < 1e-13);
    CHECK(std::abs(rule.weight * sum_mu2 - std::numbers::pi / 2.0) < 1e-13);
  }
}

TEST_CASE("Chebyshev rule is exact for weighted polynomials up to degree 2T-1") {
  const int order = 8;
  const ChebyshevRule rule = make_chebyshev_rule(order);
  double double_factorial_ratio = 1.0;  // (2j-1)!! / (2j)!!
  for (int j = 0; 2 * j <= 2 * order - 1; ++j) {
    if (j > 0) double_factorial_ratio *= (2.0 * j - 1.0) / (2.0 * j);
    double sum = 0.0;
    for (double x : rule.node) sum += std::pow(x, 2 * j);
    CAPTURE(j);
    CHECK(std::abs(rule.weight * sum - std::numbers::pi * double_factorial_ratio) < 1e-13);
  }
  const QuadratureSpec quad = make_quadrature(30, 40);
  CHECK(quad.inner.order == 30);
  CHECK(quad.outer.order == 40);
}
