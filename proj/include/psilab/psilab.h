/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef PSILAB_PSILAB_H
#define PSILAB_PSILAB_H

#include <stddef.h>

#if defined(_WIN32)
#define PSILAB_API __declspec(dllexport)
#else
#define PSILAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum psilab_status {
  PSILAB_OK = 0,
  PSILAB_E_INVALID_ARG = 1,
  PSILAB_E_DOMAIN = 2,
  PSILAB_E_DIVISION_BY_ZERO = 3,
  PSILAB_E_BRANCH_CUT = 4,
  PSILAB_E_NONCONVERGENCE = 5,
  PSILAB_E_UNKNOWN_ID = 6,
  PSILAB_E_CONFIG = 7,
  PSILAB_E_IO = 8,
  PSILAB_E_OUT_OF_RANGE = 9,
  PSILAB_E_INTERNAL = 10
} psilab_status;

typedef enum psilab_format { PSILAB_FORMAT_TEXT = 0, PSILAB_FORMAT_JSON = 1, PSILAB_FORMAT_CSV = 2 } psilab_format;

typedef struct psilab_config psilab_config;
typedef struct psilab_registry psilab_registry;
typedef struct psilab_results psilab_results;

/* Message for the last failing call on this thread; never NULL. */
PSILAB_API const char *psilab_last_error(void);
PSILAB_API const char *psilab_status_name(psilab_status s);
PSILAB_API const char *psilab_version(void);

PSILAB_API psilab_status psilab_config_create(psilab_config **out);
PSILAB_API void psilab_config_destroy(psilab_config *cfg);
PSILAB_API psilab_status psilab_config_set_n_max(psilab_config *cfg, long n_max);
PSILAB_API psilab_status psilab_config_set_m_max(psilab_config *cfg, long m_max);
/* decimal string, parsed at full working precision; NULL clears the override */
PSILAB_API psilab_status psilab_config_set_tol(psilab_config *cfg, const char *tol);
PSILAB_API psilab_status psilab_config_set_budget_terms(psilab_config *cfg, long terms);
PSILAB_API psilab_status psilab_config_set_quad_level(psilab_config *cfg, int level);
PSILAB_API psilab_status psilab_config_set_jobs(psilab_config *cfg, int jobs);
/* restrict runs; selections accumulate, none means the full registry */
PSILAB_API psilab_status psilab_config_add_group(psilab_config *cfg, const char *group);
PSILAB_API psilab_status psilab_config_add_id(psilab_config *cfg, const char *id);

PSILAB_API psilab_status psilab_registry_create(const psilab_config *cfg, psilab_registry **out);
PSILAB_API void psilab_registry_destroy(psilab_registry *reg);
PSILAB_API size_t psilab_registry_size(const psilab_registry *reg);
/* returned strings live as long as the registry */
PSILAB_API const char *psilab_registry_id(const psilab_registry *reg, size_t i);
PSILAB_API const char *psilab_registry_group(const psilab_registry *reg, size_t i);
PSILAB_API const char *psilab_registry_anchor(const psilab_registry *reg, size_t i);
PSILAB_API const char *psilab_registry_lhs(const psilab_registry *reg, size_t i);
PSILAB_API const char *psilab_registry_rhs(const psilab_registry *reg, size_t i);

/* run the selected records; engine failures are recorded per result */
PSILAB_API psilab_status psilab_run(const psilab_config *cfg, psilab_results **out);
PSILAB_API void psilab_results_destroy(psilab_results *res);
PSILAB_API size_t psilab_results_size(const psilab_results *res);
PSILAB_API size_t psilab_results_passed(const psilab_results *res);

typedef struct psilab_result_view {
  const char *id;
  const char *group;
  const char *lhs;      /* 30 significant digits */
  const char *rhs;
  const char *abs_diff;
  const char *tol;
  double abs_diff_approx;
  int passed;
  int exact;
  long effort_terms;
  int effort_levels;
  double wall_time_s;
  const char *paper_anchor;
  const char *error; /* empty when the run completed */
} psilab_result_view;

PSILAB_API psilab_status psilab_results_get(const psilab_results *res, size_t i, psilab_result_view *out);
/* path NULL or "" writes to stdout */
PSILAB_API psilab_status psilab_results_emit(const psilab_results *res, const psilab_config *cfg, psilab_format fmt,
                                             const char *path);
/* report into a caller buffer; *needed gets the full length including the terminator */
PSILAB_API psilab_status psilab_results_format(const psilab_results *res, const psilab_config *cfg, psilab_format fmt,
                                               char *buf, size_t len, size_t *needed);

/* single-value evaluators; results go to buf as decimal strings of 'digits' significant digits */
PSILAB_API psilab_status psilab_theta(int kind, long n, long alpha, int digits, char *buf, size_t len);
PSILAB_API psilab_status psilab_away(long n, int digits, char *buf, size_t len);
PSILAB_API psilab_status psilab_integral(const char *id, int digits, char *buf, size_t len);
PSILAB_API psilab_status psilab_constant(const char *name, int digits, char *buf, size_t len);

#ifdef __cplusplus
}
#endif

#endif
