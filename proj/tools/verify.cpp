/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
// Batch identity verification. Exit: 0 all pass, 1 any failure, 2 bad configuration.
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "psilab/psilab.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct ConfigDeleter {
  void operator()(psilab_config *c) const { psilab_config_destroy(c); }
};
struct RegistryDeleter {
  void operator()(psilab_registry *r) const { psilab_registry_destroy(r); }
};
struct ResultsDeleter {
  void operator()(psilab_results *r) const { psilab_results_destroy(r); }
};

int config_error(psilab_status s) {
  std::fprintf(stderr, "verify: %s: %s\n", psilab_status_name(s), psilab_last_error());
  return kExitConfig;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Verify closed-form evaluations of digamma series and related integrals"};
  std::vector<std::string> groups, ids;
  long n_max = 10, m_max = 3, budget_terms = 100000;
  int quad_level = 12, jobs = 1;
  std::string tol, format = "text", out;
  bool list = false;

  app.add_option("--group", groups, "Run only this group (repeatable)");
  app.add_option("--id", ids, "Run only this identity (repeatable)");
  app.add_option("--n-max", n_max, "Largest n in theorem grids")->capture_default_str();
  app.add_option("--m-max", m_max, "Largest m in theorem grids")->capture_default_str();
  app.add_option("--tol", tol, "Override every numeric tolerance");
  app.add_option("--budget-terms", budget_terms, "Accelerated-term cap per series")->capture_default_str();
  app.add_option("--quad-level", quad_level, "Maximum tanh-sinh level")->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  app.add_option("--out", out, "Write the report here instead of stdout");
  app.add_flag("--list", list, "Print the registry with anchors and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitConfig;
  }

  psilab_config *raw = nullptr;
  if (psilab_status s = psilab_config_create(&raw)) return config_error(s);
  std::unique_ptr<psilab_config, ConfigDeleter> cfg(raw);

  psilab_status s = PSILAB_OK;
  if (!s) s = psilab_config_set_n_max(cfg.get(), n_max);
  if (!s) s = psilab_config_set_m_max(cfg.get(), m_max);
  if (!s && !tol.empty()) s = psilab_config_set_tol(cfg.get(), tol.c_str());
  if (!s) s = psilab_config_set_budget_terms(cfg.get(), budget_terms);
  if (!s) s = psilab_config_set_quad_level(cfg.get(), quad_level);
  if (!s) s = psilab_config_set_jobs(cfg.get(), jobs);
  for (const auto &g : groups)
    if (!s) s = psilab_config_add_group(cfg.get(), g.c_str());
  for (const auto &i : ids)
    if (!s) s = psilab_config_add_id(cfg.get(), i.c_str());
  if (s) return config_error(s);

  if (list) {
    psilab_registry *rr = nullptr;
    if (psilab_status e = psilab_registry_create(cfg.get(), &rr)) return config_error(e);
    std::unique_ptr<psilab_registry, RegistryDeleter> reg(rr);
    for (size_t i = 0; i < psilab_registry_size(reg.get()); ++i)
      std::printf("%-28s %-18s %s\n", psilab_registry_id(reg.get(), i), psilab_registry_group(reg.get(), i),
                  psilab_registry_anchor(reg.get(), i));
    return kExitPass;
  }

  psilab_results *res_raw = nullptr;
  if (psilab_status e = psilab_run(cfg.get(), &res_raw)) return config_error(e);
  std::unique_ptr<psilab_results, ResultsDeleter> res(res_raw);

  psilab_format fmt = format == "json" ? PSILAB_FORMAT_JSON : format == "csv" ? PSILAB_FORMAT_CSV : PSILAB_FORMAT_TEXT;
  if (psilab_status e = psilab_results_emit(res.get(), cfg.get(), fmt, out.empty() ? nullptr : out.c_str())) {
    std::fprintf(stderr, "verify: %s: %s\n", psilab_status_name(e), psilab_last_error());
    return kExitConfig;
  }
  size_t total = psilab_results_size(res.get()), passed = psilab_results_passed(res.get());
  if (!out.empty() || fmt != PSILAB_FORMAT_TEXT)
    std::fprintf(stderr, "%zu passed / %zu total\n", passed, total);
  return passed == total ? kExitPass : kExitFail;
}
