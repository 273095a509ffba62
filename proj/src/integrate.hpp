/*
 * integrate.hpp
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
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lorasg/error.hpp"

namespace lorasg::detail {

template <class F>
double integrate_adaptive(F&& f, double lo, double hi, double rel_tol, const char* what) {
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      f, lo, hi, 15, rel_tol, &error, &l1);
  if (!std::isfinite(value) || !(error <= rel_tol * l1 || error <= 1e-15))
    throw Error(ErrorCode::Convergence, std::string(what) +
                                            ": adaptive quadrature missed tolerance (error " +
                                            std::to_string(error) + ")");
  return value;
}

}  // namespace lorasg::detail
