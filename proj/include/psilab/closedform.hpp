/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "psilab/xprec.hpp"

namespace psilab {

enum class Basis {
  ONE,
  PI,
  PI2,
  PI3,
  LN2,
  PI_LN2SQ,
  PI2_LN2,
  ZETA3,
  G,
  G_PI,
  G_LN2,
  IM_LI3,
};
constexpr int kBasisCount = 12;

const char *basis_name(Basis b);
Basis basis_from_name(const std::string &name);
XReal basis_value(Basis b);

// Exact rational combination over the fixed basis; zero coefficients are never stored.
class ClosedForm {
 public:
  ClosedForm() = default;
  ClosedForm(std::initializer_list<std::pair<Basis, Rational>> terms);

  const std::map<Basis, Rational> &terms() const { return terms_; }
  Rational coeff(Basis b) const;
  void set(Basis b, const Rational &c);
  void add(Basis b, const Rational &c);

  ClosedForm &operator+=(const ClosedForm &o);
  ClosedForm &operator-=(const ClosedForm &o);
  friend ClosedForm operator+(ClosedForm a, const ClosedForm &b) { return a += b; }
  friend ClosedForm operator-(ClosedForm a, const ClosedForm &b) { return a -= b; }
  friend ClosedForm operator*(const Rational &s, const ClosedForm &a) { return a.scaled(s); }
  ClosedForm scaled(const Rational &s) const;
  friend bool operator==(const ClosedForm &a, const ClosedForm &b) { return a.terms_ == b.terms_; }

  bool is_zero() const { return terms_.empty(); }
  // True if every nonzero coefficient sits on one of the given tags.
  bool supported_on(std::initializer_list<Basis> tags) const;

  XReal eval() const;
  std::string to_json() const;  // {"ONE":"-4","PI":"1",...}
  std::string to_string() const;

  // Which case of the theorem produced this value; informational, not part of equality.
  std::string branch;

 private:
  std::map<Basis, Rational> terms_;
};

// Theta1(n, alpha), Theta2(n, alpha) for odd or even alpha.
// Odd alpha = 2m+1 needs n >= m; even alpha = 2m needs n >= m.
ClosedForm rhs_theta1(long n, long alpha);
ClosedForm rhs_theta2(long n, long alpha);

// Convenience wrappers with the half-index m: odd -> alpha = 2m+1 (m = 0 is the plain case),
// even -> alpha = 2m (m = 0 plain).
ClosedForm rhs_theta1_odd(long n, long m);
ClosedForm rhs_theta2_odd(long n, long m);
ClosedForm rhs_theta1_even(long n, long m);
ClosedForm rhs_theta2_even(long n, long m);

// the alpha = 1 forms written out separately (only n matters); used to pin the m = 0 consistency.
ClosedForm rhs_theorem1(long n);
ClosedForm rhs_theorem2(long n);

enum class Weighted { Thm10, Thm11, Thm12 };
// Thm10: sum (1/2 - (-1)^k) f(k,n)/(2k)^2          (m ignored)
// Thm11: sum (1/2 - (-1)^k) f(k,n)/(2k+4m)^2       n >= 2m
// Thm12: sum (1/2 + (-1)^k) f(k,n)/(2k+4m-2)^2     n >= 2m-1
ClosedForm rhs_weighted(long n, long m, Weighted variant);

// sum_{k>=1} [psi((k+2n+5)/4) - psi((k+2n+3)/4)] / k^2
ClosedForm rhs_away(long n);
// 1/2 Theta1(n,0) - away(n)
ClosedForm rhs_thm13(long n);

}  // namespace psilab
