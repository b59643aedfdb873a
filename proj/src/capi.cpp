/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "psilab/psilab.h"

#include <cstring>
#include <new>
#include <set>
#include <string>
#include <vector>

#include "psilab/harness.hpp"
#include "psilab/quadrature.hpp"
#include "psilab/series.hpp"
#include "psilab/specfun.hpp"

using namespace psilab;

struct psilab_config {
  RunConfig cfg;
  std::vector<std::string> groups;
  std::vector<std::string> ids;
};

struct psilab_registry {
  std::vector<IdentityRecord> recs;
};

struct psilab_results {
  std::vector<VerificationResult> res;
  struct Strings {
    std::string lhs, rhs, diff, tol;
  };
  std::vector<Strings> text;
};

namespace {

thread_local std::string g_last_error;

psilab_status fail(psilab_status s, const std::string &msg) {
  g_last_error = msg;
  return s;
}

psilab_status from_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::Domain: return PSILAB_E_DOMAIN;
    case ErrorKind::DivisionByZero: return PSILAB_E_DIVISION_BY_ZERO;
    case ErrorKind::BranchCut: return PSILAB_E_BRANCH_CUT;
    case ErrorKind::NonConvergence: return PSILAB_E_NONCONVERGENCE;
    case ErrorKind::UnknownId: return PSILAB_E_UNKNOWN_ID;
    case ErrorKind::Config: return PSILAB_E_CONFIG;
  }
  return PSILAB_E_INTERNAL;
}

// every entry point funnels exceptions through here; nothing escapes the C boundary
template <class F>
psilab_status guard(F &&f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const Error &e) {
    return fail(from_kind(e.kind()), e.what());
  } catch (const std::bad_alloc &) {
    return fail(PSILAB_E_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(PSILAB_E_INTERNAL, e.what());
  } catch (...) {
    return fail(PSILAB_E_INTERNAL, "unknown exception");
  }
}

psilab_status copy_out(const std::string &s, char *buf, size_t len) {
  if (!buf) return fail(PSILAB_E_INVALID_ARG, "null output buffer");
  if (s.size() + 1 > len) return fail(PSILAB_E_OUT_OF_RANGE, "buffer too small, need " + std::to_string(s.size() + 1));
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return PSILAB_OK;
}

std::vector<IdentityRecord> select(const psilab_config &c) {
  std::vector<IdentityRecord> all = build_registry(c.cfg);
  if (c.groups.empty() && c.ids.empty()) return all;
  std::set<Group> gs;
  for (const auto &g : c.groups) gs.insert(group_from_name(g));
  std::set<std::string> want(c.ids.begin(), c.ids.end()), seen;
  std::vector<IdentityRecord> out;
  for (auto &r : all) {
    bool hit = gs.count(r.group) || want.count(r.id);
    if (want.count(r.id)) seen.insert(r.id);
    if (hit) out.push_back(std::move(r));
  }
  for (const auto &id : want)
    if (!seen.count(id)) throw Error(ErrorKind::UnknownId, "unknown identity id '" + id + "'");
  return out;
}

int clamp_digits(int d) { return d < 1 ? 1 : d > 36 ? 36 : d; }

}  // namespace

extern "C" {

const char *psilab_last_error(void) { return g_last_error.c_str(); }

const char *psilab_status_name(psilab_status s) {
  switch (s) {
    case PSILAB_OK: return "ok";
    case PSILAB_E_INVALID_ARG: return "invalid argument";
    case PSILAB_E_DOMAIN: return "domain error";
    case PSILAB_E_DIVISION_BY_ZERO: return "division by zero";
    case PSILAB_E_BRANCH_CUT: return "branch cut";
    case PSILAB_E_NONCONVERGENCE: return "non-convergence";
    case PSILAB_E_UNKNOWN_ID: return "unknown id";
    case PSILAB_E_CONFIG: return "configuration error";
    case PSILAB_E_IO: return "i/o error";
    case PSILAB_E_OUT_OF_RANGE: return "out of range";
    case PSILAB_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char *psilab_version(void) { return "1.0.0"; }

psilab_status psilab_config_create(psilab_config **out) {
  if (!out) return fail(PSILAB_E_INVALID_ARG, "null output pointer");
  return guard([&] {
    *out = new psilab_config();
    return PSILAB_OK;
  });
}

void psilab_config_destroy(psilab_config *cfg) { delete cfg; }

#define PSILAB_NEED(p) \
  if (!(p)) return fail(PSILAB_E_INVALID_ARG, "null handle")

psilab_status psilab_config_set_n_max(psilab_config *cfg, long n_max) {
  PSILAB_NEED(cfg);
  if (n_max < 0) return fail(PSILAB_E_CONFIG, "n-max must be >= 0");
  cfg->cfg.n_max = n_max;
  return PSILAB_OK;
}

psilab_status psilab_config_set_m_max(psilab_config *cfg, long m_max) {
  PSILAB_NEED(cfg);
  if (m_max < 0) return fail(PSILAB_E_CONFIG, "m-max must be >= 0");
  cfg->cfg.m_max = m_max;
  return PSILAB_OK;
}

psilab_status psilab_config_set_tol(psilab_config *cfg, const char *tol) {
  PSILAB_NEED(cfg);
  if (!tol) {
    cfg->cfg.tol.reset();
    return PSILAB_OK;
  }
  return guard([&] {
    XReal t;
    try {
      t = parse_xreal(tol);
    } catch (const std::exception &e) {
      return fail(PSILAB_E_CONFIG, std::string("bad tolerance '") + tol + "': " + e.what());
    }
    if (!(t > XReal(0)) || !isfinite(t)) return fail(PSILAB_E_CONFIG, std::string("tolerance must be positive: ") + tol);
    cfg->cfg.tol = t;
    return PSILAB_OK;
  });
}

psilab_status psilab_config_set_budget_terms(psilab_config *cfg, long terms) {
  PSILAB_NEED(cfg);
  if (terms < 100) return fail(PSILAB_E_CONFIG, "budget-terms must be >= 100");
  // direct sums keep the default 100:1 ratio to the accelerated cap
  cfg->cfg.budget.accelerated_terms = terms;
  cfg->cfg.budget.direct_terms = terms * 100;
  return PSILAB_OK;
}

psilab_status psilab_config_set_quad_level(psilab_config *cfg, int level) {
  PSILAB_NEED(cfg);
  if (level < 3 || level > kMaxQuadLevel)
    return fail(PSILAB_E_CONFIG, "quad-level must be in [3, " + std::to_string(kMaxQuadLevel) + "]");
  cfg->cfg.quad_level = level;
  return PSILAB_OK;
}

psilab_status psilab_config_set_jobs(psilab_config *cfg, int jobs) {
  PSILAB_NEED(cfg);
  if (jobs < 1 || jobs > 256) return fail(PSILAB_E_CONFIG, "jobs must be in [1, 256]");
  cfg->cfg.jobs = jobs;
  return PSILAB_OK;
}

psilab_status psilab_config_add_group(psilab_config *cfg, const char *group) {
  PSILAB_NEED(cfg);
  if (!group) return fail(PSILAB_E_INVALID_ARG, "null group");
  return guard([&] {
    group_from_name(group);
    cfg->groups.emplace_back(group);
    return PSILAB_OK;
  });
}

psilab_status psilab_config_add_id(psilab_config *cfg, const char *id) {
  PSILAB_NEED(cfg);
  if (!id || !*id) return fail(PSILAB_E_INVALID_ARG, "empty id");
  return guard([&] {
    cfg->ids.emplace_back(id);
    return PSILAB_OK;
  });
}

psilab_status psilab_registry_create(const psilab_config *cfg, psilab_registry **out) {
  PSILAB_NEED(cfg);
  if (!out) return fail(PSILAB_E_INVALID_ARG, "null output pointer");
  return guard([&] {
    auto *r = new psilab_registry();
    try {
      r->recs = select(*cfg);
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
    return PSILAB_OK;
  });
}

void psilab_registry_destroy(psilab_registry *reg) { delete reg; }

size_t psilab_registry_size(const psilab_registry *reg) { return reg ? reg->recs.size() : 0; }

#define PSILAB_REG_FIELD(name, expr)                                          \
  const char *psilab_registry_##name(const psilab_registry *reg, size_t i) { \
    if (!reg || i >= reg->recs.size()) return nullptr;                       \
    const auto &r = reg->recs[i];                                            \
    return expr;                                                             \
  }
PSILAB_REG_FIELD(id, r.id.c_str())
PSILAB_REG_FIELD(group, group_name(r.group))
PSILAB_REG_FIELD(anchor, r.paper_anchor.c_str())
PSILAB_REG_FIELD(lhs, r.lhs_desc.c_str())
PSILAB_REG_FIELD(rhs, r.rhs_desc.c_str())
#undef PSILAB_REG_FIELD

psilab_status psilab_run(const psilab_config *cfg, psilab_results **out) {
  PSILAB_NEED(cfg);
  if (!out) return fail(PSILAB_E_INVALID_ARG, "null output pointer");
  return guard([&] {
    auto *r = new psilab_results();
    try {
      r->res = run_records(select(*cfg), cfg->cfg);
      for (const auto &v : r->res)
        r->text.push_back({to_string(v.lhs_value, kReportDigits), to_string(v.rhs_value, kReportDigits),
                           to_string(v.abs_diff, kReportDigits), to_string(v.tol, 6)});
    } catch (...) {
      delete r;
      throw;
    }
    *out = r;
    return PSILAB_OK;
  });
}

void psilab_results_destroy(psilab_results *res) { delete res; }

size_t psilab_results_size(const psilab_results *res) { return res ? res->res.size() : 0; }

size_t psilab_results_passed(const psilab_results *res) {
  size_t n = 0;
  if (res)
    for (const auto &r : res->res) n += r.passed;
  return n;
}

psilab_status psilab_results_get(const psilab_results *res, size_t i, psilab_result_view *out) {
  PSILAB_NEED(res);
  if (!out) return fail(PSILAB_E_INVALID_ARG, "null output pointer");
  if (i >= res->res.size()) return fail(PSILAB_E_OUT_OF_RANGE, "result index out of range");
  const auto &r = res->res[i];
  const auto &t = res->text[i];
  out->id = r.id.c_str();
  out->group = group_name(r.group);
  out->lhs = t.lhs.c_str();
  out->rhs = t.rhs.c_str();
  out->abs_diff = t.diff.c_str();
  out->tol = t.tol.c_str();
  out->abs_diff_approx = r.abs_diff.to_double();
  out->passed = r.passed ? 1 : 0;
  out->exact = r.exact ? 1 : 0;
  out->effort_terms = r.effort.terms;
  out->effort_levels = r.effort.levels;
  out->wall_time_s = r.wall_time;
  out->paper_anchor = r.paper_anchor.c_str();
  out->error = r.error.c_str();
  return PSILAB_OK;
}

static ReportFormat to_format(psilab_format f) {
  switch (f) {
    case PSILAB_FORMAT_JSON: return ReportFormat::Json;
    case PSILAB_FORMAT_CSV: return ReportFormat::Csv;
    default: return ReportFormat::Text;
  }
}

psilab_status psilab_results_emit(const psilab_results *res, const psilab_config *cfg, psilab_format fmt,
                                  const char *path) {
  PSILAB_NEED(res);
  PSILAB_NEED(cfg);
  return guard([&] {
    try {
      emit_report(res->res, cfg->cfg, to_format(fmt), path ? path : "");
    } catch (const Error &e) {
      return fail(PSILAB_E_IO, e.what());
    }
    return PSILAB_OK;
  });
}

psilab_status psilab_results_format(const psilab_results *res, const psilab_config *cfg, psilab_format fmt, char *buf,
                                    size_t len, size_t *needed) {
  PSILAB_NEED(res);
  PSILAB_NEED(cfg);
  return guard([&] {
    std::string s = format_report(res->res, cfg->cfg, to_format(fmt));
    if (needed) *needed = s.size() + 1;
    return copy_out(s, buf, len);
  });
}

psilab_status psilab_theta(int kind, long n, long alpha, int digits, char *buf, size_t len) {
  if (kind != 1 && kind != 2) return fail(PSILAB_E_INVALID_ARG, "kind must be 1 or 2");
  return guard([&] {
    XReal eps = XReal::raw(1e-30Q);
    SumResult s = kind == 1 ? theta1(n, alpha, eps) : theta2(n, alpha, eps);
    return copy_out(to_string(s.value, clamp_digits(digits)), buf, len);
  });
}

psilab_status psilab_away(long n, int digits, char *buf, size_t len) {
  return guard([&] {
    SumResult s = away_series(n, XReal::raw(1e-30Q));
    return copy_out(to_string(s.value, clamp_digits(digits)), buf, len);
  });
}

psilab_status psilab_integral(const char *id, int digits, char *buf, size_t len) {
  if (!id) return fail(PSILAB_E_INVALID_ARG, "null id");
  return guard([&] {
    QuadResult q = integrate(integrand_registry(id).spec, XReal::raw(1e-30Q), kMaxQuadLevel);
    return copy_out(to_string(q.value, clamp_digits(digits)), buf, len);
  });
}

psilab_status psilab_constant(const char *name, int digits, char *buf, size_t len) {
  if (!name) return fail(PSILAB_E_INVALID_ARG, "null name");
  return guard([&] {
    std::string n = name;
    XReal v;
    if (n == "pi") v = pi();
    else if (n == "ln2") v = ln2();
    else if (n == "gamma") v = euler_gamma();
    else if (n == "catalan") v = catalan();
    else if (n == "zeta3") v = zeta3();
    else if (n == "im_li3_1pi") v = im_li3_1pi();
    else return fail(PSILAB_E_UNKNOWN_ID, "unknown constant '" + n + "'");
    return copy_out(to_string(v, clamp_digits(digits)), buf, len);
  });
}

}  // extern "C"
