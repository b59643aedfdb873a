/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
/* Plain C client: proves the header is C-clean and the handles behave. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "psilab/psilab.h"

static int failures = 0;

#define EXPECT(c)                                                     \
  do {                                                                \
    if (!(c)) {                                                       \
      fprintf(stderr, "%s:%d: expected %s (%s)\n", __FILE__, __LINE__, \
              #c, psilab_last_error());                               \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

int main(void) {
  psilab_config *cfg = NULL;
  EXPECT(psilab_config_create(&cfg) == PSILAB_OK);
  EXPECT(psilab_config_create(NULL) == PSILAB_E_INVALID_ARG);

  EXPECT(psilab_config_set_n_max(cfg, -1) == PSILAB_E_CONFIG);
  EXPECT(strlen(psilab_last_error()) > 0);
  EXPECT(psilab_config_set_quad_level(cfg, 40) == PSILAB_E_CONFIG);
  EXPECT(psilab_config_set_jobs(cfg, 0) == PSILAB_E_CONFIG);
  EXPECT(psilab_config_set_tol(cfg, "abc") == PSILAB_E_CONFIG);
  EXPECT(psilab_config_set_tol(cfg, "-1e-3") == PSILAB_E_CONFIG);
  EXPECT(psilab_config_add_group(cfg, "nope") == PSILAB_E_CONFIG);
  EXPECT(psilab_config_set_n_max(NULL, 3) == PSILAB_E_INVALID_ARG);

  EXPECT(psilab_config_set_n_max(cfg, 5) == PSILAB_OK);
  EXPECT(psilab_config_set_m_max(cfg, 1) == PSILAB_OK);
  EXPECT(psilab_config_set_jobs(cfg, 2) == PSILAB_OK);
  EXPECT(psilab_config_add_id(cfg, "thm2_n0") == PSILAB_OK);
  EXPECT(psilab_config_add_id(cfg, "thm10_exact_n5") == PSILAB_OK);
  EXPECT(psilab_config_add_group(cfg, "integrals_new") == PSILAB_OK);

  psilab_registry *reg = NULL;
  EXPECT(psilab_registry_create(cfg, &reg) == PSILAB_OK);
  EXPECT(psilab_registry_size(reg) == 15);
  EXPECT(psilab_registry_anchor(reg, 0) && strlen(psilab_registry_anchor(reg, 0)) > 0);
  EXPECT(psilab_registry_id(reg, 999) == NULL);
  psilab_registry_destroy(reg);

  psilab_results *res = NULL;
  EXPECT(psilab_run(cfg, &res) == PSILAB_OK);
  EXPECT(psilab_results_size(res) == 15);
  EXPECT(psilab_results_passed(res) == 15);
  psilab_result_view v;
  EXPECT(psilab_results_get(res, 0, &v) == PSILAB_OK);
  EXPECT(strcmp(v.id, "new_n1") == 0);
  EXPECT(v.passed == 1);
  EXPECT(strlen(v.lhs) > 20);
  EXPECT(psilab_results_get(res, 99, &v) == PSILAB_E_OUT_OF_RANGE);

  size_t need = 0;
  char small[8];
  EXPECT(psilab_results_format(res, cfg, PSILAB_FORMAT_CSV, small, sizeof small, &need) == PSILAB_E_OUT_OF_RANGE);
  char *buf = malloc(need);
  EXPECT(psilab_results_format(res, cfg, PSILAB_FORMAT_CSV, buf, need, &need) == PSILAB_OK);
  EXPECT(strncmp(buf, "id,group,lhs,rhs,abs_diff,passed,effort,wall_time\n", 50) == 0);
  free(buf);
  EXPECT(psilab_results_emit(res, cfg, PSILAB_FORMAT_JSON, "/nonexistent-dir/r.json") == PSILAB_E_IO);
  psilab_results_destroy(res);

  psilab_config *bad = NULL;
  EXPECT(psilab_config_create(&bad) == PSILAB_OK);
  EXPECT(psilab_config_add_id(bad, "no_such") == PSILAB_OK);
  res = NULL;
  EXPECT(psilab_run(bad, &res) == PSILAB_E_UNKNOWN_ID);
  EXPECT(res == NULL);
  psilab_config_destroy(bad);

  char out[64];
  EXPECT(psilab_constant("catalan", 10, out, sizeof out) == PSILAB_OK);
  EXPECT(strcmp(out, "9.159655942e-01") == 0);
  EXPECT(psilab_constant("e", 10, out, sizeof out) == PSILAB_E_UNKNOWN_ID);
  EXPECT(psilab_theta(2, 0, 1, 20, out, sizeof out) == PSILAB_OK);
  EXPECT(strncmp(out, "-4.3205078622112498154", 22) == 0);
  EXPECT(psilab_theta(3, 0, 1, 20, out, sizeof out) == PSILAB_E_INVALID_ARG);
  EXPECT(psilab_theta(1, -1, 1, 20, out, sizeof out) == PSILAB_E_DOMAIN);
  EXPECT(psilab_away(0, 12, out, sizeof out) == PSILAB_OK);
  EXPECT(psilab_integral("Q7", 12, out, sizeof out) == PSILAB_OK);
  EXPECT(psilab_integral("Q0", 12, out, sizeof out) == PSILAB_E_UNKNOWN_ID);
  EXPECT(strcmp(psilab_status_name(PSILAB_E_NONCONVERGENCE), "non-convergence") == 0);

  psilab_config_destroy(cfg);
  psilab_config_destroy(NULL);
  psilab_results_destroy(NULL);
  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("capi: all checks passed\n");
  return failures ? 1 : 0;
}
