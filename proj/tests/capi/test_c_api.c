/*
 * test_c_api.c
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

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "lorasg/lorasg.h"

static int failures = 0;

#define EXPECT(cond)                                                 \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                    \
    }                                                                \
  } while (0)

int main(void) {
  lorasg_document* doc = NULL;
  lorasg_coverage cov;
  lorasg_report* report = NULL;
  double before;

  EXPECT(strlen(lorasg_version()) > 0);
  EXPECT(strcmp(lorasg_status_string(LORASG_OK), "ok") == 0);
  EXPECT(lorasg_default_workers() >= 1);

  EXPECT(lorasg_document_from_preset("fig2", &doc) == LORASG_OK);
  EXPECT(doc != NULL);
  EXPECT(lorasg_document_validate(doc) == LORASG_OK);

  EXPECT(lorasg_coverage_eval(doc, LORASG_UNORDERED_FIXED, LORASG_METHOD_EXACT, -10.0, 1, &cov) == LORASG_OK);
  EXPECT(fabs(cov.value - 0.3630329426910801) < 1e-6);
  EXPECT(cov.bound_side == LORASG_BOUND_UPPER);
  EXPECT(cov.method == LORASG_METHOD_EXACT);
  EXPECT(cov.ci_halfwidth == 0.0);
  EXPECT(cov.ase > 0.0 && cov.ee > 0.0);
  before = cov.value;

  EXPECT(lorasg_coverage_eval(doc, LORASG_ORDERED_RANDOM, LORASG_METHOD_GC, -10.0, 1, &cov) == LORASG_OK);
  EXPECT(cov.bound_side == LORASG_BOUND_LOWER);

  EXPECT(lorasg_document_set(doc, "trials", "400") == LORASG_OK);
  EXPECT(lorasg_coverage_eval(doc, LORASG_UNORDERED_FIXED, LORASG_METHOD_MC, -10.0, 2, &cov) == LORASG_OK);
  EXPECT(cov.bound_side == LORASG_BOUND_ESTIMATE);
  EXPECT(cov.ci_halfwidth > 0.0);

  /* a rejected value leaves the document untouched */
  EXPECT(lorasg_document_set(doc, "path_loss_exponent", "1.5") == LORASG_ERR_CONFIG);
  EXPECT(strlen(lorasg_last_error()) > 0);
  EXPECT(lorasg_document_set(doc, "no_such_key", "1") == LORASG_ERR_CONFIG);
  EXPECT(lorasg_coverage_eval(doc, LORASG_UNORDERED_FIXED, LORASG_METHOD_EXACT, -10.0, 1, &cov) == LORASG_OK);
  EXPECT(cov.value == before);

  EXPECT(lorasg_document_describe(doc, &report) == LORASG_OK);
  EXPECT(strstr(lorasg_report_text(report), "\"model\"") != NULL);
  lorasg_report_free(report);
  report = NULL;

  EXPECT(lorasg_oracle_run("beta", &report) == LORASG_OK);
  EXPECT(lorasg_report_passed(report) == 1);
  lorasg_report_free(report);
  report = NULL;
  EXPECT(lorasg_oracle_run("nonsense", &report) != LORASG_OK);

  EXPECT(lorasg_coverage_eval(NULL, LORASG_UNORDERED_FIXED, LORASG_METHOD_GC, 0.0, 1, &cov) ==
         LORASG_ERR_INVALID_ARGUMENT);
  EXPECT(lorasg_coverage_eval(doc, (lorasg_scenario)42, LORASG_METHOD_GC, 0.0, 1, &cov) ==
         LORASG_ERR_INVALID_ARGUMENT);
  EXPECT(lorasg_coverage_eval(doc, LORASG_UNORDERED_FIXED, LORASG_METHOD_GC, 0.0, 1, NULL) ==
         LORASG_ERR_INVALID_ARGUMENT);
  lorasg_document_free(doc);
  doc = NULL;

  EXPECT(lorasg_document_from_preset("nope", &doc) == LORASG_ERR_CONFIG);
  EXPECT(doc == NULL);
  EXPECT(lorasg_document_parse("axis = gamma_th_db\ngrid = 0\nmethods = gc\nscenarios = ordered-fixed\n", &doc) ==
         LORASG_OK);
  lorasg_document_free(doc);
  EXPECT(lorasg_document_load("/nonexistent/x.cfg", &doc) == LORASG_ERR_IO);
  lorasg_document_free(NULL);
  lorasg_report_free(NULL);

  if (failures == 0) printf("c api: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
