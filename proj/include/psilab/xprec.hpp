/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "psilab/error.hpp"

namespace psilab {

// Quad precision real: 113-bit significand, about 34 significant digits.
class XReal {
 public:
  using raw_type = __float128;

  constexpr XReal() : v_(0) {}
  constexpr XReal(int v) : v_(v) {}
  constexpr XReal(long v) : v_(v) {}
  constexpr XReal(long long v) : v_(v) {}
  constexpr XReal(unsigned long v) : v_(v) {}
  constexpr XReal(double v) : v_(v) {}
  static constexpr XReal raw(raw_type v) {
    XReal r;
    r.v_ = v;
    return r;
  }

  constexpr raw_type value() const { return v_; }
  double to_double() const { return static_cast<double>(v_); }

  XReal operator-() const { return raw(-v_); }
  XReal &operator+=(const XReal &o) { v_ += o.v_; return *this; }
  XReal &operator-=(const XReal &o) { v_ -= o.v_; return *this; }
  XReal &operator*=(const XReal &o) { v_ *= o.v_; return *this; }
  XReal &operator/=(const XReal &o);

  friend XReal operator+(XReal a, const XReal &b) { return a += b; }
  friend XReal operator-(XReal a, const XReal &b) { return a -= b; }
  friend XReal operator*(XReal a, const XReal &b) { return a *= b; }
  friend XReal operator/(XReal a, const XReal &b) { return a /= b; }

  friend bool operator==(const XReal &a, const XReal &b) { return a.v_ == b.v_; }
  friend bool operator<(const XReal &a, const XReal &b) { return a.v_ < b.v_; }
  friend bool operator>(const XReal &a, const XReal &b) { return a.v_ > b.v_; }
  friend bool operator<=(const XReal &a, const XReal &b) { return a.v_ <= b.v_; }
  friend bool operator>=(const XReal &a, const XReal &b) { return a.v_ >= b.v_; }

 private:
  raw_type v_;
};

XReal abs(const XReal &x);
XReal ln(const XReal &x);
XReal log1p(const XReal &x);
XReal exp(const XReal &x);
XReal sqrt(const XReal &x);
XReal atan(const XReal &x);
XReal atan2(const XReal &y, const XReal &x);
XReal sin(const XReal &x);
XReal cos(const XReal &x);
XReal tan(const XReal &x);
XReal sinh(const XReal &x);
XReal cosh(const XReal &x);
XReal tanh(const XReal &x);
XReal pow_int(const XReal &x, long n);
XReal cbrt(const XReal &x);
XReal ldexp(const XReal &x, int e);
bool isfinite(const XReal &x);

// Decimal formatting with an explicit number of significant digits (<= 36).
std::string to_string(const XReal &x, int digits = 36);
XReal parse_xreal(const std::string &s);

struct XComplex {
  XReal re, im;

  XComplex() = default;
  XComplex(const XReal &r) : re(r) {}
  XComplex(const XReal &r, const XReal &i) : re(r), im(i) {}

  XComplex operator-() const { return {-re, -im}; }
  friend XComplex operator+(const XComplex &a, const XComplex &b) { return {a.re + b.re, a.im + b.im}; }
  friend XComplex operator-(const XComplex &a, const XComplex &b) { return {a.re - b.re, a.im - b.im}; }
  friend XComplex operator*(const XComplex &a, const XComplex &b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend XComplex operator/(const XComplex &a, const XComplex &b);
  friend bool operator==(const XComplex &a, const XComplex &b) { return a.re == b.re && a.im == b.im; }
  XComplex &operator+=(const XComplex &o) { return *this = *this + o; }
  XComplex &operator-=(const XComplex &o) { return *this = *this - o; }
  XComplex &operator*=(const XComplex &o) { return *this = *this * o; }
  XComplex &operator/=(const XComplex &o) { return *this = *this / o; }
};

inline XComplex conj(const XComplex &z) { return {z.re, -z.im}; }
XReal abs(const XComplex &z);
XReal arg(const XComplex &z);
XComplex ln(const XComplex &z);  // principal branch, Im in (-pi, pi]
XComplex exp(const XComplex &z);
XComplex atan(const XComplex &z);
XComplex pow_int(const XComplex &z, long n);

// Exact rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}
  Rational(long n, long d);
  explicit Rational(const mpq_class &q) : q_(q) { q_.canonicalize(); }
  static Rational parse(const std::string &s);  // "p/q" or "p"

  const mpq_class &mpq() const { return q_; }
  std::string num_str() const { return q_.get_num().get_str(); }
  std::string den_str() const { return q_.get_den().get_str(); }
  std::string str() const { return q_.get_str(); }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
  Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
  Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
  Rational &operator/=(const Rational &o);
  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
  friend int cmp(const Rational &a, const Rational &b) { return ::cmp(a.q_, b.q_); }
  friend bool operator<(const Rational &a, const Rational &b) { return a.q_ < b.q_; }

  XReal to_xreal() const;

 private:
  mpq_class q_;
};

// Fundamental constants, computed once and cached.
enum class Constant { Pi, Ln2, EulerGamma };
XReal constant(Constant c);
XReal constant(const std::string &name);
inline XReal pi() { return constant(Constant::Pi); }
inline XReal ln2() { return constant(Constant::Ln2); }
inline XReal euler_gamma() { return constant(Constant::EulerGamma); }

// Smallest positive eps with 1 + eps != 1.
XReal machine_eps();

}  // namespace psilab
