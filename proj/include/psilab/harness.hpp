/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "psilab/quadrature.hpp"
#include "psilab/series.hpp"
#include "psilab/xprec.hpp"

namespace psilab {

enum class Group {
  Lemmas,
  TheoremsOdd,
  TheoremsEven,
  TheoremsWeighted,
  Away,
  IntegralsValean,
  IntegralsNew,
  AuxSeries,
  Properties,
};
const char *group_name(Group g);
Group group_from_name(const std::string &name);  // throws Config
const std::vector<Group> &all_groups();

struct RunConfig {
  long n_max = 10;
  long m_max = 3;
  std::optional<XReal> tol;  // overrides every numeric record
  SeriesBudget budget;
  int quad_level = kMaxQuadLevel;
  int jobs = 1;
};

struct Effort {
  long terms = 0;
  int levels = 0;
};

// What a record's computation hands back.
struct Evaluation {
  XReal lhs, rhs;
  Effort effort;
  // Exact records compare ClosedForm vectors: `exact_diff` is the L1 norm of the
  // coefficient difference and replaces |lhs - rhs|.
  bool exact = false;
  XReal exact_diff;
  std::string note;
};

// Shared per run: integral values are computed once and reused by combinations.
class RunContext {
 public:
  explicit RunContext(RunConfig cfg) : config(std::move(cfg)) {}
  const RunConfig config;
  QuadResult integral(const std::string &id);
  XReal series_eps() const;
  XReal quad_eps() const;

 private:
  std::mutex mu_;
  std::map<std::string, QuadResult> cache_;
};

struct IdentityRecord {
  std::string id;
  Group group;
  std::string lhs_desc;
  std::string rhs_desc;
  XReal tol;
  std::string paper_anchor;
  bool exact = false;
  std::function<Evaluation(RunContext &)> compute;
};

struct VerificationResult {
  std::string id;
  Group group = Group::Lemmas;
  XReal lhs_value, rhs_value, abs_diff, tol;
  bool passed = false;
  bool exact = false;
  Effort effort;
  double wall_time = 0;
  std::string paper_anchor;
  std::string error;  // set when the computation failed
};

// Full registry for the given grid limits; checks id uniqueness and coverage.
std::vector<IdentityRecord> build_registry(const RunConfig &cfg = {});
// Ids that must be present in every registry.
const std::vector<std::string> &required_ids();
void assert_coverage(const std::vector<IdentityRecord> &records);

VerificationResult run_identity(const IdentityRecord &rec, RunContext &ctx);
VerificationResult run_identity(const std::string &id, const RunConfig &cfg = {});
// Runs records on a pool of cfg.jobs workers; results sorted by id.
std::vector<VerificationResult> run_records(const std::vector<IdentityRecord> &records, const RunConfig &cfg);
std::vector<VerificationResult> run_group(Group g, const RunConfig &cfg = {});

enum class ReportFormat { Text, Json, Csv };
ReportFormat format_from_name(const std::string &name);
std::string format_report(const std::vector<VerificationResult> &results, const RunConfig &cfg, ReportFormat f);
// Writes to `path`, or stdout when empty; I/O failures throw.
void emit_report(const std::vector<VerificationResult> &results, const RunConfig &cfg, ReportFormat f,
                 const std::string &path);

// Numbers in reports carry this many significant digits.
constexpr int kReportDigits = 30;

}  // namespace psilab
