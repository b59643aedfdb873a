/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "psilab/harness.hpp"

using namespace psilab;

namespace {

XReal ten(int e) { return pow_int(XReal(10), -e); }

RunConfig grid_config() {
  RunConfig c;
  c.n_max = 10;
  c.m_max = 3;
  return c;
}

const std::vector<IdentityRecord> &registry() {
  static const auto r = build_registry(grid_config());
  return r;
}

std::vector<IdentityRecord> pick(const std::function<bool(const std::string &)> &want) {
  std::vector<IdentityRecord> out;
  for (const auto &r : registry())
    if (want(r.id)) out.push_back(r);
  return out;
}

std::vector<IdentityRecord> pick(const std::set<std::string> &ids) {
  auto out = pick([&](const std::string &id) { return ids.count(id) > 0; });
  if (out.size() != ids.size()) throw Error(ErrorKind::Config, "acceptance: some listed ids are not registered");
  return out;
}

bool starts(const std::string &s, const std::string &p) { return s.rfind(p, 0) == 0; }

// n and m parsed from "..._nN" / "..._nN_mM"
long field(const std::string &id, char tag) {
  auto p = id.rfind(std::string("_") + tag);
  if (p == std::string::npos || p + 2 >= id.size() || !std::isdigit(static_cast<unsigned char>(id[p + 2]))) return -1;
  return std::stol(id.substr(p + 2));
}

struct Outcome {
  size_t count = 0;
  size_t bad = 0;
  XReal worst;
  double seconds = 0;
  std::vector<std::string> failures;
};

// a record meets the bar when it ran cleanly and abs_diff <= bar (exact records: diff == 0)
Outcome measure(const std::vector<IdentityRecord> &recs, const std::function<XReal(const IdentityRecord &)> &bar,
                std::vector<VerificationResult> *keep = nullptr) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto res = run_records(recs, grid_config());
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::map<std::string, const IdentityRecord *> by_id;
  for (const auto &r : recs) by_id[r.id] = &r;
  for (const auto &r : res) {
    ++o.count;
    XReal b = r.exact ? XReal(0) : bar(*by_id[r.id]);
    bool ok = r.error.empty() && isfinite(r.abs_diff) && r.abs_diff <= b;
    if (!r.exact) o.worst = std::max(o.worst, r.abs_diff);
    if (!ok) {
      ++o.bad;
      o.failures.push_back(r.id + (r.error.empty() ? "" : " (" + r.error + ")"));
    }
  }
  if (keep) *keep = std::move(res);
  return o;
}

int failed = 0;

void line(int n, const std::string &what, bool ok, const std::string &detail, const std::vector<std::string> &fails = {}) {
  std::printf("criterion %d [%s]: %s  %s\n", n, what.c_str(), ok ? "PASS" : "FAIL", detail.c_str());
  for (size_t i = 0; i < fails.size() && i < 10; ++i) std::printf("    failing: %s\n", fails[i].c_str());
  std::fflush(stdout);
  if (!ok) ++failed;
}

std::string summary(const Outcome &o) {
  char buf[200];
  std::snprintf(buf, sizeof buf, "(%zu/%zu ok, max abs_diff %s, %.2f s)", o.count - o.bad, o.count,
                to_string(o.worst, 3).c_str(), o.seconds);
  return buf;
}

void criterion1() {
  auto recs = pick({"dilog12", "trilog12", "li2i", "li2i_re", "li2mi", "li2mi_re", "li3i", "li3i_re", "li3mi", "li3mi_re",
                    "remark2", "remark2_im", "remark2_plus", "remark2_plus_im", "lemli3ref", "lemli3ref_im", "li3pm1s",
                    "li3pm1s_minus"});
  Outcome o = measure(recs, [](const auto &) { return ten(25); });
  line(1, "special values <= 1e-25, < 1 s", o.bad == 0 && o.seconds < 1.0, summary(o), o.failures);
}

void criterion2() {
  auto in_grid = [](const std::string &id) {
    long n = field(id, 'n'), m = field(id, 'm');
    if (n < 0 || n > 8) return false;
    if (m > 3) return false;
    for (const char *p : {"thm1_n", "thm2_n", "thm6_n", "thm8_n", "thm3_n", "thm4_n", "thm7_n", "thm9_n"})
      if (starts(id, p)) return true;
    return false;
  };
  auto recs = pick(in_grid);
  Outcome o = measure(recs, [](const IdentityRecord &r) {
    bool theta1 = starts(r.id, "thm1_") || starts(r.id, "thm3_") || starts(r.id, "thm6_") || starts(r.id, "thm7_");
    return theta1 ? ten(18) : ten(20);
  });
  line(2, "theorem grids n<=8, m<=3, Theta1 <= 1e-18, Theta2 <= 1e-20, < 60 s", o.bad == 0 && o.seconds < 60.0 && o.count >= 100,
       summary(o), o.failures);
}

void criterion3() {
  auto recs = pick([](const std::string &id) {
    if (id == "thm10_example_n0") return false;  // the theorem statement itself, not a worked example
    return starts(id, "thm10_example_") || starts(id, "thm11_example_") || starts(id, "thm12_example_") ||
           starts(id, "thm13_example_");
  });
  Outcome o = measure(recs, [](const auto &) { return XReal(0); });
  line(3, "worked examples reproduced exactly (11 + 2)", o.bad == 0 && o.count == 13, summary(o), o.failures);
}

void criterion4() {
  auto recs = pick([](const std::string &id) {
    return starts(id, "thm10_exact_") || starts(id, "thm11_exact_") || starts(id, "thm12_exact_") || starts(id, "thm13_exact_");
  });
  Outcome o = measure(recs, [](const auto &) { return XReal(0); });
  // n 0..10 for the single-index families, every admissible (n, m) with m <= 3 for the others
  size_t expect = 11 + 11;
  for (long m = 1; m <= 3; ++m) expect += (10 - 2 * m + 1) + (10 - (2 * m - 1) + 1);
  line(4, "exact derivation identities, n<=10, m<=3", o.bad == 0 && o.count == expect, summary(o), o.failures);
}

void criterion5() {
  auto recs = pick({"valean_v1", "valean_v2", "valean_v3", "valean_v4"});
  Outcome o = measure(recs, [](const auto &) { return ten(20); });
  line(5, "Valean integrals <= 1e-20, < 5 s", o.bad == 0 && o.seconds < 5.0, summary(o), o.failures);
}

void criterion6() {
  auto recs = pick([](const std::string &id) { return starts(id, "new_n") || starts(id, "concl_pi"); });
  Outcome o = measure(recs, [](const auto &) { return ten(18); });
  // 13 combinations, 2 pi representations, 2 cube roots
  line(6, "new integral identities and pi representations <= 1e-18", o.bad == 0 && o.count == 17, summary(o), o.failures);
}

void criterion7() {
  auto recs = pick({"sumjkcat", "usres", "Harm2k3", "Harm2k4", "h2khk", "neweq1", "genr0508", "S-psi1"});
  Outcome o = measure(recs, [](const auto &) { return ten(20); });
  line(7, "harmonic sums <= 1e-20", o.bad == 0, summary(o), o.failures);
}

void criterion8() {
  std::map<std::string, XReal> bars = {{"lemconj1", ten(30)},         {"digamma_recurrence", ten(27)},
                                       {"digamma_duplication", ten(27)}, {"polygamma_reflection", ten(27)},
                                       {"fpsi_ffinite_grid", ten(30)},  {"alternating_bracketing", XReal(0)},
                                       {"quad_split", XReal(1)},        {"quad_dual_rule", ten(15)}};
  std::set<std::string> ids;
  for (const auto &b : bars) ids.insert(b.first);
  Outcome o = measure(pick(ids), [&](const IdentityRecord &r) { return bars.at(r.id); });

  // full suite twice, same configuration; abs_diff compared bit for bit
  auto t0 = std::chrono::steady_clock::now();
  RunConfig cfg = grid_config();
  cfg.jobs = 4;
  auto a = run_records(registry(), cfg);
  auto b = run_records(build_registry(cfg), cfg);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  size_t mismatched = a.size() == b.size() ? 0 : 1;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i].id != b[i].id || a[i].abs_diff.value() != b[i].abs_diff.value() || a[i].lhs_value.value() != b[i].lhs_value.value())
      ++mismatched;
  size_t suite_fail = 0;
  for (const auto &r : a) suite_fail += !r.passed;
  char det[200];
  std::snprintf(det, sizeof det, "; determinism: %zu records x2, %zu mismatches, %zu suite failures, %.1f s", a.size(),
                mismatched, suite_fail, secs);
  line(8, "property suites and full-suite determinism", o.bad == 0 && mismatched == 0, summary(o) + det, o.failures);
}

void criterion9() {
  auto recs = pick([](const std::string &id) {
    return starts(id, "thm10_n") || starts(id, "thm11_n") || starts(id, "thm12_n") || starts(id, "thm13_n");
  });
  std::vector<VerificationResult> res;
  measure(recs, [](const auto &) { return XReal(1); }, &res);
  // check the claim from the emitted report itself
  const std::string path = "acceptance_precision_report.json";
  emit_report(res, grid_config(), ReportFormat::Json, path);
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  size_t count = 0, bad = 0;
  XReal worst12(0), worst13(0);
  std::vector<std::string> fails;
  for (const auto &r : j["results"]) {
    std::string id = r["id"];
    XReal d = parse_xreal(r["abs_diff"].get<std::string>());
    bool t13 = starts(id, "thm13_");
    XReal bar = t13 ? ten(26) : ten(12);
    (t13 ? worst13 : worst12) = std::max(t13 ? worst13 : worst12, d);
    ++count;
    if (!(d <= bar) || !r["error"].get<std::string>().empty()) {
      ++bad;
      fails.push_back(id);
    }
  }
  char buf[240];
  std::snprintf(buf, sizeof buf, "(%zu/%zu ok; Thm10-12 max abs_diff %s vs 1e-12, Thm13 max %s vs 1e-26; report %s)", count - bad,
                count, to_string(worst12, 3).c_str(), to_string(worst13, 3).c_str(), path.c_str());
  line(9, "remark precision claims", bad == 0 && count > 0, buf, fails);
}

}  // namespace

int main() {
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
  } catch (const std::exception &e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 2;
  }
  std::printf("%d of 9 criteria failed\n", failed);
  return failed ? 1 : 0;
}
