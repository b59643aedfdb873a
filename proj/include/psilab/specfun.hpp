/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <vector>

#include "psilab/xprec.hpp"

namespace psilab {

// Exact Bernoulli numbers B_0 .. B_60 (B_1 = -1/2).
const Rational &bernoulli(int n);
constexpr int kBernoulliMax = 60;

Rational harmonic(long n);

XReal digamma(const XReal &x);
XReal polygamma(int order, const XReal &x);

XReal zeta_int(int s);
XReal eta_int(int s);

enum class SpecialConstant { CatalanG, Zeta3, ImLi3OnePlusI };
XReal special_constant(SpecialConstant c);
inline XReal catalan() { return special_constant(SpecialConstant::CatalanG); }
inline XReal zeta3() { return special_constant(SpecialConstant::Zeta3); }
inline XReal im_li3_1pi() { return special_constant(SpecialConstant::ImLi3OnePlusI); }

XComplex dilog(const XComplex &z);
XComplex trilog(const XComplex &z);

// f(k,n) = psi((2k+2n+5)/4) - psi((2k+2n+3)/4)
XReal f_psi(long k, long n);
// Same kernel on a real argument: F(x) = psi((2x+5)/4) - psi((2x+3)/4), f(k,n) = F(k+n).
XReal f_kernel(const XReal &x);

struct FFinite {
  Rational rational_part;
  Rational pi_coeff;
  XReal to_xreal() const;
};
FFinite f_finite(long k, long n);

// Derivatives of cot(pi z) in z, orders 0..5, used by the reflection checks.
XReal cot_pi_derivative(int order, const XReal &z);

}  // namespace psilab
