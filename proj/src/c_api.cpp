/*
 * c_api.cpp
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

#include "lorasg/lorasg.h"

#include <exception>
#include <new>
#include <string>

#include "lorasg/config.hpp"
#include "lorasg/coverage.hpp"
#include "lorasg/error.hpp"
#include "lorasg/metrics.hpp"
#include "lorasg/monte_carlo.hpp"
#include "lorasg/oracle.hpp"
#include "lorasg/sweep.hpp"

struct lorasg_document {
  lorasg::SweepDocument doc;
};

struct lorasg_report {
  std::string text;
  bool passed = true;
};

namespace {

thread_local std::string last_error;

lorasg_status status_of(lorasg::ErrorCode code) {
  switch (code) {
    case lorasg::ErrorCode::Domain: return LORASG_ERR_DOMAIN;
    case lorasg::ErrorCode::Convergence: return LORASG_ERR_CONVERGENCE;
    case lorasg::ErrorCode::Config: return LORASG_ERR_CONFIG;
    case lorasg::ErrorCode::Io: return LORASG_ERR_IO;
    case lorasg::ErrorCode::Mismatch: return LORASG_ERR_MISMATCH;
    case lorasg::ErrorCode::Degenerate: return LORASG_ERR_DEGENERATE;
  }
  return LORASG_ERR_INTERNAL;
}

template <class F>
lorasg_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return LORASG_OK;
  } catch (const lorasg::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LORASG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LORASG_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return LORASG_ERR_INTERNAL;
  }
}

lorasg_status invalid(const char* message) {
  last_error = message;
  return LORASG_ERR_INVALID_ARGUMENT;
}

lorasg::ScenarioKind kind_of(lorasg_scenario s) {
  switch (s) {
    case LORASG_UNORDERED_FIXED: return lorasg::ScenarioKind::UnorderedFixed;
    case LORASG_UNORDERED_RANDOM: return lorasg::ScenarioKind::UnorderedRandom;
    case LORASG_ORDERED_FIXED: return lorasg::ScenarioKind::OrderedFixed;
    case LORASG_ORDERED_RANDOM: return lorasg::ScenarioKind::OrderedRandom;
  }
  throw lorasg::Error(lorasg::ErrorCode::Domain, "unknown scenario value");
}

lorasg_bound_side side_of(lorasg::BoundSide side) {
  switch (side) {
    case lorasg::BoundSide::UpperBound: return LORASG_BOUND_UPPER;
    case lorasg::BoundSide::LowerBound: return LORASG_BOUND_LOWER;
    case lorasg::BoundSide::Exact: return LORASG_BOUND_EXACT;
    case lorasg::BoundSide::Estimate: return LORASG_BOUND_ESTIMATE;
  }
  return LORASG_BOUND_ESTIMATE;
}

lorasg_status make_document(lorasg_document** out, lorasg::SweepDocument (*build)(const char*),
                            const char* arg) {
  if (!out) return invalid("output handle pointer is NULL");
  if (!arg) return invalid("input string is NULL");
  *out = nullptr;
  return guarded([&] { *out = new lorasg_document{build(arg)}; });
}

}  // namespace

extern "C" {

const char* lorasg_version(void) { return "0.1.0"; }

const char* lorasg_status_string(lorasg_status status) {
  switch (status) {
    case LORASG_OK: return "ok";
    case LORASG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LORASG_ERR_DOMAIN: return "domain error";
    case LORASG_ERR_CONVERGENCE: return "convergence error";
    case LORASG_ERR_CONFIG: return "config error";
    case LORASG_ERR_IO: return "i/o error";
    case LORASG_ERR_MISMATCH: return "mismatch";
    case LORASG_ERR_DEGENERATE: return "degenerate input";
    case LORASG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* lorasg_last_error(void) { return last_error.c_str(); }

unsigned lorasg_default_workers(void) { return lorasg::default_worker_count(); }

lorasg_status lorasg_document_from_preset(const char* name, lorasg_document** out) {
  return make_document(out, [](const char* n) { return lorasg::preset_document(n); }, name);
}

lorasg_status lorasg_document_parse(const char* text, lorasg_document** out) {
  return make_document(out, [](const char* t) { return lorasg::parse_config(t); }, text);
}

lorasg_status lorasg_document_load(const char* path, lorasg_document** out) {
  return make_document(out, [](const char* p) { return lorasg::load_config(p); }, path);
}

lorasg_status lorasg_document_set(lorasg_document* doc, const char* key, const char* value) {
  if (!doc || !key || !value) return invalid("NULL argument to lorasg_document_set");
  // apply to a copy so a rejected value leaves the document untouched
  return guarded([&] {
    lorasg::SweepDocument copy = doc->doc;
    lorasg::apply_setting(copy, key, value);
    lorasg::validate_model(copy.model);
    doc->doc = std::move(copy);
  });
}

lorasg_status lorasg_document_validate(const lorasg_document* doc) {
  if (!doc) return invalid("document handle is NULL");
  return guarded([&] { lorasg::validate_document(doc->doc); });
}

lorasg_status lorasg_document_describe(const lorasg_document* doc, lorasg_report** out) {
  if (!doc || !out) return invalid("NULL argument to lorasg_document_describe");
  *out = nullptr;
  return guarded([&] { *out = new lorasg_report{lorasg::describe_document(doc->doc) + "\n", true}; });
}

void lorasg_document_free(lorasg_document* doc) { delete doc; }

lorasg_status lorasg_coverage_eval(const lorasg_document* doc, lorasg_scenario scenario,
                                   lorasg_method method, double gamma_th_db, unsigned workers,
                                   lorasg_coverage* out) {
  if (!doc || !out) return invalid("NULL argument to lorasg_coverage_eval");
  if (scenario < LORASG_UNORDERED_FIXED || scenario > LORASG_ORDERED_RANDOM) return invalid("unknown scenario value");
  if (method < LORASG_METHOD_EXACT || method > LORASG_METHOD_MC) return invalid("unknown method value");
  return guarded([&] {
    lorasg::ModelSettings m = doc->doc.model;
    m.gamma_th_db = gamma_th_db;
    lorasg::SweepDocument single = doc->doc;
    single.model = m;
    single.sweep.axis = "gamma_th_db";
    single.sweep.grid = {gamma_th_db};
    single.sweep.series_key.clear();
    single.sweep.series_values.clear();
    single.sweep.scenarios = {kind_of(scenario)};
    lorasg::validate_document(single);

    const lorasg::LinkParams p = lorasg::resolve_link(m);
    const lorasg::Scenario scen = lorasg::make_scenario(kind_of(scenario), m);
    const double gamma = lorasg::db_to_linear(gamma_th_db);
    lorasg::CoverageResult cov;
    switch (method) {
      case LORASG_METHOD_EXACT:
        cov = lorasg::coverage_exact(gamma, scen, p, doc->doc.sweep.integration_tol);
        break;
      case LORASG_METHOD_GC:
        cov = lorasg::coverage_gc(gamma, scen, p,
                                  lorasg::make_quadrature(doc->doc.sweep.quadrature_inner,
                                                          doc->doc.sweep.quadrature_outer));
        break;
      case LORASG_METHOD_MC: {
        lorasg::SimSpec spec;
        spec.config = lorasg::resolve_network(m);
        spec.scenario = scen;
        spec.trials = doc->doc.sweep.trials;
        spec.seed = doc->doc.sweep.seed;
        spec.workers = workers;
        spec.thresholds = {gamma};
        cov = lorasg::to_coverage_result(lorasg::estimate_coverage(spec).front(), gamma);
        break;
      }
      default:
        throw lorasg::Error(lorasg::ErrorCode::Domain, "unknown method value");
    }
    const lorasg::MetricResult metrics =
        lorasg::evaluate_metrics(m.nodes_per_cluster, p.receiver_density, p.typical_power_mw, cov);
    out->value = cov.value;
    out->gamma_th = cov.gamma_th;
    out->ci_halfwidth = cov.ci_halfwidth.value_or(0.0);
    out->ase = metrics.ase;
    out->ee = metrics.ee;
    out->method = method;
    out->bound_side = side_of(cov.bound_side);
  });
}

lorasg_status lorasg_sweep_run(const lorasg_document* doc, unsigned workers,
                               lorasg_report** summary) {
  if (!doc) return invalid("document handle is NULL");
  if (summary) *summary = nullptr;
  return guarded([&] {
    const lorasg::SweepOutcome outcome = lorasg::run_sweep(doc->doc, workers);
    if (summary) {
      std::string text = "wrote " + std::to_string(outcome.rows) + " rows to " + outcome.csv_path +
                         " (sidecar " + outcome.sidecar_path + ")\n" + outcome.summary;
      *summary = new lorasg_report{std::move(text), true};
    }
  });
}

lorasg_status lorasg_oracle_run(const char* check, lorasg_report** out) {
  if (!check || !out) return invalid("NULL argument to lorasg_oracle_run");
  *out = nullptr;
  return guarded([&] {
    const auto rows = lorasg::run_oracle_checks(check);
    bool passed = true;
    for (const auto& r : rows) passed = passed && r.pass;
    *out = new lorasg_report{lorasg::format_oracle_table(rows), passed};
  });
}

const char* lorasg_report_text(const lorasg_report* report) {
  return report ? report->text.c_str() : "";
}

int lorasg_report_passed(const lorasg_report* report) { return report && report->passed ? 1 : 0; }

void lorasg_report_free(lorasg_report* report) { delete report; }

}  // extern "C"
