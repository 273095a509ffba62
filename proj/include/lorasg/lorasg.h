/*
 * lorasg.h
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

#ifndef LORASG_LORASG_H
#define LORASG_LORASG_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(LORASG_BUILDING_LIBRARY)
#    define LORASG_API __declspec(dllexport)
#  else
#    define LORASG_API __declspec(dllimport)
#  endif
#else
#  define LORASG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lorasg_status {
  LORASG_OK = 0,
  LORASG_ERR_INVALID_ARGUMENT = 1,
  LORASG_ERR_DOMAIN = 2,
  LORASG_ERR_CONVERGENCE = 3,
  LORASG_ERR_CONFIG = 4,
  LORASG_ERR_IO = 5,
  LORASG_ERR_MISMATCH = 6,
  LORASG_ERR_DEGENERATE = 7,
  LORASG_ERR_INTERNAL = 99
} lorasg_status;

typedef enum lorasg_scenario {
  LORASG_UNORDERED_FIXED = 0,
  LORASG_UNORDERED_RANDOM = 1,
  LORASG_ORDERED_FIXED = 2,
  LORASG_ORDERED_RANDOM = 3
} lorasg_scenario;

typedef enum lorasg_method {
  LORASG_METHOD_EXACT = 0,
  LORASG_METHOD_GC = 1,
  LORASG_METHOD_MC = 2
} lorasg_method;

typedef enum lorasg_bound_side {
  LORASG_BOUND_UPPER = 0,
  LORASG_BOUND_LOWER = 1,
  LORASG_BOUND_EXACT = 2,
  LORASG_BOUND_ESTIMATE = 3
} lorasg_bound_side;

typedef struct lorasg_coverage {
  double value;
  double gamma_th;      /* linear */
  double ci_halfwidth;  /* 95%, Monte Carlo only; 0 otherwise */
  double ase;           /* bit/s/Hz/m^2 */
  double ee;            /* bit/s/Hz per mW */
  lorasg_method method;
  lorasg_bound_side bound_side;
} lorasg_coverage;

/* Model and sweep settings: a preset plus `key = value` overrides. */
typedef struct lorasg_document lorasg_document;
/* Text produced by the library, with an overall pass flag. */
typedef struct lorasg_report lorasg_report;

LORASG_API const char* lorasg_version(void);
LORASG_API const char* lorasg_status_string(lorasg_status status);
/* Message of the last failing call on this thread; never NULL. */
LORASG_API const char* lorasg_last_error(void);
/* LORASG_WORKERS if set, else the hardware thread count. */
LORASG_API unsigned lorasg_default_workers(void);

LORASG_API lorasg_status lorasg_document_from_preset(const char* name, lorasg_document** out);
LORASG_API lorasg_status lorasg_document_parse(const char* text, lorasg_document** out);
LORASG_API lorasg_status lorasg_document_load(const char* path, lorasg_document** out);
LORASG_API lorasg_status lorasg_document_set(lorasg_document* doc, const char* key, const char* value);
LORASG_API lorasg_status lorasg_document_validate(const lorasg_document* doc);
LORASG_API lorasg_status lorasg_document_describe(const lorasg_document* doc, lorasg_report** out);
LORASG_API void lorasg_document_free(lorasg_document* doc);

/* Coverage at one threshold using the document's model settings. workers = 0 picks the default. */
LORASG_API lorasg_status lorasg_coverage_eval(const lorasg_document* doc, lorasg_scenario scenario,
                                              lorasg_method method, double gamma_th_db,
                                              unsigned workers, lorasg_coverage* out);

/* Runs the document's sweep, writing the CSV and its .json sidecar. */
LORASG_API lorasg_status lorasg_sweep_run(const lorasg_document* doc, unsigned workers,
                                          lorasg_report** summary);

/* check: "2f1", "beta", "laplace" or "all". */
LORASG_API lorasg_status lorasg_oracle_run(const char* check, lorasg_report** out);

LORASG_API const char* lorasg_report_text(const lorasg_report* report);
LORASG_API int lorasg_report_passed(const lorasg_report* report);
LORASG_API void lorasg_report_free(lorasg_report* report);

#ifdef __cplusplus
}
#endif

#endif
