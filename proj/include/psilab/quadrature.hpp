/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "psilab/closedform.hpp"
#include "psilab/xprec.hpp"

namespace psilab {

// Integrands see the abscissa together with its exact distances to both
// endpoints, so ln(1-x) and friends can be formed without cancellation.
struct Point {
  XReal x;   // abscissa
  XReal xa;  // x - a
  XReal bx;  // b - x
};
using Integrand = std::function<XReal(const Point &)>;

enum class Singularity { None, LogAtA, LogAtB, LogBoth };

struct IntegralSpec {
  std::string id;
  Integrand f;
  XReal a, b;
  Singularity singularity = Singularity::None;
};

struct QuadResult {
  XReal value;
  int levels_used = 0;
  XReal error_estimate;
  std::vector<XReal> level_errors;  // estimate after each level >= 1
  long evaluations = 0;
};

constexpr int kMaxQuadLevel = 12;

// Tanh-sinh with level doubling; converged once successive levels agree within eps/4.
QuadResult integrate(const IntegralSpec &spec, const XReal &eps, int max_level = kMaxQuadLevel);

// The same integrand over [c,d] inside [a,b]; points keep their distances to the
// original endpoints so endpoint-stable integrands stay valid.
IntegralSpec restrict_to(const IntegralSpec &spec, const XReal &c, const XReal &d);

// Composite Gauss-Legendre on [a+da, b-db] with panels graded geometrically toward
// both ends; the excluded end pieces are left to the caller to bound.
XReal gauss_legendre(const Integrand &f, const XReal &a, const XReal &b, const XReal &da, const XReal &db,
                     int order = 24);

// Registry of single integrals (Q*) and their combinations (V*, N*, C*).
struct IntegralEntry {
  std::string id;
  IntegralSpec spec;
  ClosedForm closed_form;
  std::string anchor;
};
struct CombinationEntry {
  std::string id;
  std::vector<std::pair<Rational, std::string>> components;  // coefficient, Q id
  ClosedForm closed_form;
  std::string anchor;
};

const std::vector<IntegralEntry> &integral_registry();
const std::vector<CombinationEntry> &combination_registry();
const IntegralEntry &integrand_registry(const std::string &id);
const CombinationEntry &combination(const std::string &id);

}  // namespace psilab
