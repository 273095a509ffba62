/*
 * lorasg_cli.cpp
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

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lorasg/lorasg.h"

namespace {

int report_failure(lorasg_status status, const char* what) {
  std::fprintf(stderr, "lorasg: %s: %s: %s\n", what, lorasg_status_string(status), lorasg_last_error());
  return status == LORASG_ERR_CONFIG || status == LORASG_ERR_INVALID_ARGUMENT ? 2 : 1;
}

struct DocumentHandle {
  lorasg_document* doc = nullptr;
  ~DocumentHandle() { lorasg_document_free(doc); }
};

struct ReportHandle {
  lorasg_report* report = nullptr;
  ~ReportHandle() { lorasg_report_free(report); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coverage, area spectral efficiency and energy efficiency of clustered LoRa networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lorasg_version());

  unsigned workers = 0;
  app.add_option("--workers", workers, "Monte Carlo worker threads (default: LORASG_WORKERS or all cores)");

  auto* sweep = app.add_subcommand("sweep", "Evaluate a preset or config file and write CSV + JSON sidecar");
  std::string preset;
  std::string config_path;
  std::string out_path;
  std::string methods;
  std::string scenarios;
  long long trials = -1;
  long long seed = -1;
  std::vector<std::string> overrides;
  auto* preset_opt = sweep->add_option("--preset", preset, "custom, fig2 ... fig7");
  auto* config_opt = sweep->add_option("--config", config_path, "key = value config file")->check(CLI::ExistingFile);
  preset_opt->excludes(config_opt);
  sweep->add_option("--out", out_path, "CSV output path (sidecar gets .json appended)");
  sweep->add_option("--trials", trials, "Monte Carlo trials")->check(CLI::Range(2LL, 1000000000LL));
  sweep->add_option("--seed", seed, "Monte Carlo seed")->check(CLI::NonNegativeNumber);
  sweep->add_option("--methods", methods, "comma list of exact, gc, mc");
  sweep->add_option("--scenarios", scenarios, "comma list of {unordered,ordered}-{fixed,random}");
  sweep->add_option("--set", overrides, "extra key=value settings, applied last");

  auto* validate = app.add_subcommand("validate", "Check a config file and print the resolved settings");
  std::string validate_path;
  validate->add_option("--config", validate_path, "key = value config file")->required()->check(CLI::ExistingFile);

  auto* oracle = app.add_subcommand("oracle", "Compare closed forms against independent quadrature");
  std::string check = "all";
  oracle->add_option("--check", check, "2f1, beta, laplace or all")
      ->check(CLI::IsMember({"2f1", "beta", "laplace", "all"}));

  CLI11_PARSE(app, argc, argv);
  if (workers == 0) workers = lorasg_default_workers();

  if (*sweep) {
    DocumentHandle h;
    lorasg_status st = config_path.empty()
                           ? lorasg_document_from_preset(preset.empty() ? "custom" : preset.c_str(), &h.doc)
                           : lorasg_document_load(config_path.c_str(), &h.doc);
    if (st != LORASG_OK) return report_failure(st, "loading settings");

    std::vector<std::pair<std::string, std::string>> settings;
    if (!out_path.empty()) settings.emplace_back("output", out_path);
    if (trials >= 0) settings.emplace_back("trials", std::to_string(trials));
    if (seed >= 0) settings.emplace_back("seed", std::to_string(seed));
    if (!methods.empty()) settings.emplace_back("methods", methods);
    if (!scenarios.empty()) settings.emplace_back("scenarios", scenarios);
    for (const auto& kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        std::fprintf(stderr, "lorasg: --set expects key=value, got '%s'\n", kv.c_str());
        return 2;
      }
      settings.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    }
    for (const auto& [key, value] : settings) {
      st = lorasg_document_set(h.doc, key.c_str(), value.c_str());
      if (st != LORASG_OK) return report_failure(st, "applying settings");
    }

    ReportHandle summary;
    st = lorasg_sweep_run(h.doc, workers, &summary.report);
    if (st != LORASG_OK) return report_failure(st, "sweep");
    std::fputs(lorasg_report_text(summary.report), stdout);
    return 0;
  }

  if (*validate) {
    DocumentHandle h;
    lorasg_status st = lorasg_document_load(validate_path.c_str(), &h.doc);
    if (st != LORASG_OK) return report_failure(st, "loading config");
    st = lorasg_document_validate(h.doc);
    if (st != LORASG_OK) return report_failure(st, "validating config");
    ReportHandle description;
    st = lorasg_document_describe(h.doc, &description.report);
    if (st != LORASG_OK) return report_failure(st, "describing config");
    std::fputs(lorasg_report_text(description.report), stdout);
    std::puts("config ok");
    return 0;
  }

  ReportHandle table;
  const lorasg_status st = lorasg_oracle_run(check.c_str(), &table.report);
  if (st != LORASG_OK) return report_failure(st, "oracle");
  std::fputs(lorasg_report_text(table.report), stdout);
  return lorasg_report_passed(table.report) ? 0 : 1;
}
