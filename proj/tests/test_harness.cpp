/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "oracle.hpp"
#include "psilab/harness.hpp"

using namespace psilab;
using oracle::tol;

namespace {
const RunConfig &small() {
  static RunConfig c = [] {
    RunConfig r;
    r.n_max = 5;
    r.m_max = 1;
    return r;
  }();
  return c;
}
}  // namespace

TEST_CASE("registry coverage") {
  RunConfig cfg;
  auto recs = build_registry(cfg);
  std::set<std::string> ids;
  for (const auto &r : recs) {
    CHECK(ids.insert(r.id).second);
    CHECK(r.tol > XReal(0));
    CHECK(!r.paper_anchor.empty());
    CHECK(r.compute);
  }
  for (const auto &id : required_ids()) CHECK_MESSAGE(ids.count(id), id);
  auto missing = recs;
  missing.erase(std::remove_if(missing.begin(), missing.end(), [](const auto &r) { return r.id == "lem5b"; }), missing.end());
  CHECK_KIND(assert_coverage(missing), ErrorKind::Config);
  auto dup = recs;
  dup.push_back(recs.front());
  CHECK_KIND(assert_coverage(dup), ErrorKind::Config);
  // grid shape: weighted records only where n >= 2m (minus) and n >= 2m-1 (plus)
  CHECK(ids.count("thm11_n2_m1"));
  CHECK(!ids.count("thm11_n1_m1"));
  CHECK(ids.count("thm12_n1_m1"));
  CHECK(ids.count("thm3_n8_m3"));
  CHECK(!ids.count("thm3_n2_m3"));
}

TEST_CASE("run single identities") {
  VerificationResult a = run_identity("thm2_n0", small());
  CHECK(a.passed);
  CHECK(a.abs_diff <= tol(20));
  CHECK(a.abs_diff == abs(a.lhs_value - a.rhs_value));
  CHECK(a.effort.terms > 0);
  VerificationResult v = run_identity("valean_v1", small());
  CHECK(v.passed);
  CHECK(v.abs_diff <= tol(20));
  CHECK(v.effort.levels >= 3);
  VerificationResult e = run_identity("thm10_exact_n5", small());
  CHECK(e.passed);
  CHECK(e.exact);
  CHECK(e.abs_diff == XReal(0));
  VerificationResult t2 = run_identity("thm2_n2", small());
  CHECK(t2.passed);
  CHECK_KIND(run_identity("no_such_id", small()), ErrorKind::UnknownId);
}

TEST_CASE("engine failure is a failed result") {
  IdentityRecord r{"boom", Group::Properties, "x", "y", tol(10), "anchor", false, [](RunContext &) -> Evaluation {
                     throw NonConvergence("engine gave up", 0);
                   }};
  RunContext ctx(small());
  VerificationResult res = run_identity(r, ctx);
  CHECK(!res.passed);
  CHECK(res.error.find("gave up") != std::string::npos);
  IdentityRecord nan{"nan", Group::Properties, "x", "y", tol(10), "anchor", false, [](RunContext &) {
                       Evaluation e;
                       e.lhs = XReal::raw(__builtin_nanq(""));
                       return e;
                     }};
  CHECK(!run_identity(nan, ctx).passed);
}

TEST_CASE("tolerance override") {
  RunConfig c = small();
  c.tol = tol(40);
  CHECK(!run_identity("thm1_n0", c).passed);
  // exact records keep their zero bar
  CHECK(run_identity("thm10_exact_n2", c).passed);
}

TEST_CASE("groups") {
  auto lem = run_group(Group::Lemmas, small());
  CHECK(!lem.empty());
  for (const auto &r : lem) CHECK_MESSAGE(r.passed, r.id);
  auto nw = run_group(Group::IntegralsNew, small());
  CHECK(nw.size() == 13);
  for (const auto &r : nw) CHECK_MESSAGE(r.passed, r.id);
  RunConfig full;
  full.n_max = 10;
  full.m_max = 3;
  auto w = run_group(Group::TheoremsWeighted, full);
  long exact = 0;
  for (const auto &r : w) {
    CHECK_MESSAGE(r.passed, r.id);
    exact += r.exact;
  }
  CHECK(exact >= 11 + 12);
  CHECK(std::is_sorted(w.begin(), w.end(), [](const auto &a, const auto &b) { return a.id < b.id; }));
  for (Group g : all_groups()) CHECK(group_from_name(group_name(g)) == g);
  CHECK_KIND(group_from_name("nope"), ErrorKind::Config);
}

TEST_CASE("parallel runs match serial runs bit for bit") {
  RunConfig a = small(), b = small();
  b.jobs = 4;
  auto ra = run_group(Group::TheoremsOdd, a), rb = run_group(Group::TheoremsOdd, b);
  REQUIRE(ra.size() == rb.size());
  for (size_t i = 0; i < ra.size(); ++i) {
    CHECK(ra[i].id == rb[i].id);
    CHECK(ra[i].abs_diff.value() == rb[i].abs_diff.value());
  }
}

TEST_CASE("reports") {
  auto res = run_group(Group::IntegralsValean, small());
  res.push_back(run_identity("thm10_exact_n3", small()));
  // one failing row so the summary shows it
  RunConfig strict = small();
  strict.tol = tol(45);
  res.push_back(run_identity("thm1_n0", strict));

  std::string text = format_report(res, small(), ReportFormat::Text);
  std::ostringstream want;
  want << (res.size() - 1) << " passed / " << res.size() << " total";
  CHECK(text.find(want.str()) != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);

  std::string csv = format_report(res, small(), ReportFormat::Csv);
  CHECK(csv.rfind("id,group,lhs,rhs,abs_diff,passed,effort,wall_time\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(res.size()) + 1);

  auto j = nlohmann::json::parse(format_report(res, small(), ReportFormat::Json));
  REQUIRE(j["results"].size() == res.size());
  CHECK(j["summary"]["passed"] == res.size() - 1);
  CHECK(j["summary"]["total"] == res.size());
  CHECK(j["config"]["n_max"] == 5);
  for (size_t i = 0; i < res.size(); ++i) {
    const auto &r = res[i];
    const auto &o = j["results"][i];
    CHECK(o["id"] == r.id);
    CHECK(o["group"] == group_name(r.group));
    CHECK(o["lhs"] == to_string(r.lhs_value, 30));
    CHECK(o["rhs"] == to_string(r.rhs_value, 30));
    CHECK(o["abs_diff"] == to_string(r.abs_diff, 30));
    CHECK(o["passed"] == r.passed);
    CHECK(o["effort"]["terms"] == r.effort.terms);
    CHECK(o["effort"]["levels"] == r.effort.levels);
    CHECK(o["wall_time_s"].get<double>() == r.wall_time);
    CHECK(o["paper_anchor"] == r.paper_anchor);
    // 30 significant digits survive the trip
    CHECK(abs(parse_xreal(o["lhs"].get<std::string>()) - r.lhs_value) <= abs(r.lhs_value) * tol(29));
  }

  std::string path = "psilab_report_test.json";
  emit_report(res, small(), ReportFormat::Json, path);
  std::ifstream in(path);
  CHECK(nlohmann::json::parse(in) == j);
  std::remove(path.c_str());
  CHECK_KIND(emit_report(res, small(), ReportFormat::Csv, "/nonexistent-dir/x.csv"), ErrorKind::Config);
  CHECK(format_from_name("csv") == ReportFormat::Csv);
  CHECK_KIND(format_from_name("xml"), ErrorKind::Config);
}
