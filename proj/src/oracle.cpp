/*
 * oracle.cpp
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

#include "lorasg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "lorasg/config.hpp"
#include "lorasg/error.hpp"
#include "lorasg/laplace.hpp"
#include "lorasg/special_functions.hpp"

namespace lorasg {

namespace oracle {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class F>
double finite(F f, double lo, double hi) {
  if (hi <= lo) return 0.0;
  boost::math::quadrature::tanh_sinh<double> rule;
  return rule.integrate(f, lo, hi);
}

template <class F>
double to_infinity(F f, double lo) {
  boost::math::quadrature::exp_sinh<double> rule;
  return rule.integrate(f, lo, kInf);
}

}  // namespace

double hyp2f1_1_b(double b, double z) {
  // t = e^-u: b int_0^inf e^(-b u) / (1 + z e^-u) du, split where z e^-u = 1
  auto f = [b, z](double u) { return b / (std::exp(b * u) + z * std::exp((b - 1.0) * u)); };
  const double knee = z > 1.0 ? std::log(z) : 0.0;
  return finite(f, 0.0, knee) + to_infinity(f, knee);
}

double gamma(double x) {
  auto f = [x](double t) { return std::exp((x - 1.0) * std::log(t) - t); };
  return finite(f, 0.0, 1.0) + to_infinity(f, 1.0);
}

double beta(double x, double y) {
  // split at 1/2 and reflect the right half so each piece is singular only at 0
  auto piece = [](double p, double q) {
    return finite([p, q](double t) { return std::pow(t, p - 1.0) * std::pow(1.0 - t, q - 1.0); },
                  0.0, 0.5);
  };
  return piece(x, y) + piece(y, x);
}

double binomial_beta_sum(int n, double delta) {
  auto f = [n, delta](double t) {
    // (1 - (1 + t)^-n) / t -> n as t -> 0
    const double ratio = t > 0.0 ? -std::expm1(-n * std::log1p(t)) / t : n;
    return std::pow(t, -delta) * ratio;
  };
  return finite(f, 0.0, 1.0) + to_infinity(f, 1.0);
}

double annulus_mean(double q, double alpha, double inner, double outer) {
  auto f = [q, alpha](double r) { return r / (1.0 + q * std::pow(r, -alpha)); };
  const double knee = std::clamp(std::pow(q, 1.0 / alpha), inner, outer);
  const double integral = finite(f, inner, knee) + finite(f, knee, outer);
  return 2.0 * integral / (outer * outer - inner * inner);
}

double plane_integral(double q, double alpha, int n) {
  auto f = [q, alpha, n](double r) {
    const double x = q * std::pow(r, -alpha);
    const double v = n == 0 ? 1.0 / (1.0 + 1.0 / x) : -std::expm1(-n * std::log1p(x));
    return 2.0 * std::numbers::pi * r * v;
  };
  const double knee = std::pow(q, 1.0 / alpha);
  return finite(f, 0.0, knee) + to_infinity(f, knee);
}

}  // namespace oracle

namespace {

OracleRow make_row(std::string name, double impl, double ref, double tol) {
  OracleRow row;
  row.name = std::move(name);
  row.implementation = impl;
  row.oracle = ref;
  row.rel_error = std::abs(impl - ref) / std::max(std::abs(ref), 1e-300);
  row.tolerance = tol;
  row.pass = row.rel_error <= tol;
  return row;
}

template <class... Args>
std::string label(const char* fmt, Args... args) {
  char buf[128];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

void hyp2f1_rows(std::vector<OracleRow>& rows) {
  const double delta = 2.0 / 3.5;
  for (double b : {0.25, delta, 1.0, 1.0 + delta, 3.7}) {
    for (double z : {1e-3, 0.3, 0.7, 1.5, 5.0, 100.0, 1e4, 1e6}) {
      rows.push_back(make_row(label("2F1(1,b;b+1;-z) b=%.6g z=%.6g", b, z), hyp2f1_1_b(b, z),
                              oracle::hyp2f1_1_b(b, z), 1e-8));
    }
  }
}

void beta_rows(std::vector<OracleRow>& rows) {
  for (double x : {0.3, 0.5, 1.0 - 2.0 / 3.5, 1.7, 4.5})
    rows.push_back(make_row(label("Gamma(x) x=%.6g", x), gamma_fn(x), oracle::gamma(x), 1e-10));
  const double delta = 2.0 / 3.5;
  for (int n : {1, 3, 6}) {
    for (int p = 1; p <= n; ++p) {
      const double x = p - delta;
      const double y = n - p + delta;
      rows.push_back(make_row(label("B(x,y) x=%.6g y=%.6g", x, y), beta_fn(x, y), oracle::beta(x, y), 1e-10));
    }
  }
  for (int n : {1, 2, 6, 15, 30})
    rows.push_back(make_row(label("sum C(n,p) B(p-d,n-p+d) n=%d d=%.6g", n, delta),
                            binomial_beta_sum(n, delta), oracle::binomial_beta_sum(n, delta), 1e-10));
}

void laplace_rows(std::vector<OracleRow>& rows) {
  const SweepDocument doc = preset_document("fig2");
  const LinkParams p = resolve_link(doc.model);
  const double a = p.cluster_radius;
  const double alpha = p.alpha;
  const int n = 6;
  const double mean = 4.5;
  const double tol = 1e-6;
  for (double x : {0.05, 0.3, 1.0, 3.0}) {
    // q^(1/alpha) = x a sets where the interference kernel turns over
    const double q = std::pow(x * a, alpha);
    const double s = q / (p.interferer_power_mw * p.eta);
    const double disc = oracle::annulus_mean(q, alpha, 0.0, a);
    rows.push_back(make_row(label("intra fixed n=6 q^(1/alpha)/a=%.3g", x),
                            laplace_intra_fixed(s, n, p), std::pow(disc, n - 1), tol));
    rows.push_back(make_row(label("intra random mean=4.5 q^(1/alpha)/a=%.3g", x),
                            laplace_intra_random(s, mean, p),
                            std::exp(-(mean - 1.0) * (1.0 - disc)), tol));
    rows.push_back(make_row(label("inter fixed upper n=6 q^(1/alpha)/a=%.3g", x),
                            laplace_inter_fixed_upper(s, n, p),
                            std::exp(-p.receiver_density * oracle::plane_integral(q, alpha, n)), tol));
    rows.push_back(make_row(label("inter random lower mean=4.5 q^(1/alpha)/a=%.3g", x),
                            laplace_inter_random_lower(s, mean, p),
                            std::exp(-p.receiver_density * mean * oracle::plane_integral(q, alpha, 0)), tol));
    const double qz = s * p.coexist_power_mw * p.eta;
    rows.push_back(make_row(label("coexist q^(1/alpha)/a=%.3g", x), laplace_coexist(s, p),
                            std::exp(-p.coexist_density * oracle::plane_integral(qz, alpha, 0)), tol));
    for (double frac : {0.2, 0.7, 1.0}) {
      const double rk = frac * a;
      const int k = 3;
      const double near = oracle::annulus_mean(q, alpha, 0.0, rk);
      // at r_k = a the far nodes sit on the rim
      const double far = frac < 1.0 ? oracle::annulus_mean(q, alpha, rk, a)
                                    : 1.0 / (1.0 + q * std::pow(a, -alpha));
      rows.push_back(make_row(label("ordered fixed k=3 n=6 q^(1/alpha)/a=%.3g r_k/a=%.2g", x, frac),
                              laplace_intra_ordered_fixed(s, k, n, rk, p),
                              std::pow(near, k - 1) * std::pow(far, n - k), tol));
      rows.push_back(make_row(label("ordered random mean=4.5 q^(1/alpha)/a=%.3g r_k/a=%.2g", x, frac),
                              laplace_intra_ordered_random(s, mean, rk, p),
                              std::exp(-(mean - 1.0) * (1.0 - near)), tol));
    }
  }
}

}  // namespace

std::vector<OracleRow> run_oracle_checks(std::string_view check) {
  std::vector<OracleRow> rows;
  const bool all = check == "all";
  if (all || check == "2f1") hyp2f1_rows(rows);
  if (all || check == "beta") beta_rows(rows);
  if (all || check == "laplace") laplace_rows(rows);
  if (!all && check != "2f1" && check != "beta" && check != "laplace")
    throw Error(ErrorCode::Domain, "unknown oracle check '" + std::string(check) + "' (2f1, beta, laplace, all)");
  return rows;
}

std::string format_oracle_table(const std::vector<OracleRow>& rows) {
  std::ostringstream out;
  std::size_t failed = 0;
  char line[320];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%-4s %-58s impl=%.15g oracle=%.15g rel=%.2e tol=%.0e\n",
                  r.pass ? "ok" : "FAIL", r.name.c_str(), r.implementation, r.oracle, r.rel_error,
                  r.tolerance);
    out << line;
    if (!r.pass) ++failed;
  }
  out << rows.size() - failed << "/" << rows.size() << " oracle checks passed\n";
  return out.str();
}

}  // namespace lorasg
