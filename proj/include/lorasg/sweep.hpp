/*
 * sweep.hpp
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

#include <cstddef>
#include <string>

#include "lorasg/config.hpp"

namespace lorasg {

struct SweepOutcome {
  std::size_t rows = 0;
  std::string csv_path;
  std::string sidecar_path;  // csv_path + ".json"
  std::string summary;
};

// Header of every sweep CSV; the first column is named after the axis.
std::string csv_header(const std::string& axis);

// Validates, evaluates every (series, scenario, method, grid point) and writes
// the CSV plus a JSON sidecar. On failure nothing is left at the output paths.
SweepOutcome run_sweep(const SweepDocument& doc, unsigned workers);

}  // namespace lorasg
