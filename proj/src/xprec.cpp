/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "psilab/xprec.hpp"

extern "C" {
#include <quadmath.h>
}

#include <cstdlib>
#include <vector>

namespace psilab {

namespace {

using q = __float128;

// sum_{k>=0} (-1)^k / ((2k+1) n^(2k+1))
q atan_inv(long n) {
  q term = 1.0Q / n, sum = 0, n2 = static_cast<q>(n) * n;
  for (long k = 0; term != 0; ++k) {
    q t = term / (2 * k + 1);
    sum += (k & 1) ? -t : t;
    term /= n2;
    if (t < 1e-40Q * sum) break;
  }
  return sum;
}

// sum_{k>=0} 1 / ((2k+1) n^(2k+1))
q atanh_inv(long n) {
  q term = 1.0Q / n, sum = 0, n2 = static_cast<q>(n) * n;
  for (long k = 0;; ++k) {
    q t = term / (2 * k + 1);
    sum += t;
    term /= n2;
    if (t < 1e-40Q * sum) break;
  }
  return sum;
}

struct Constants {
  XReal pi, ln2, gamma;
  Constants() {
    pi = XReal::raw(16 * atan_inv(5) - 4 * atan_inv(239));
    ln2 = XReal::raw(2 * atanh_inv(3));
    // Published to 50 places; cross-checked in the test suite.
    gamma = parse_xreal("0.57721566490153286060651209008240243104215933593992");
  }
};

const Constants &constants() {
  static const Constants c;
  return c;
}

}  // namespace

XReal &XReal::operator/=(const XReal &o) {
  if (o.v_ == 0) throw Error(ErrorKind::DivisionByZero, "division by zero");
  v_ /= o.v_;
  return *this;
}

XReal abs(const XReal &x) { return XReal::raw(fabsq(x.value())); }

XReal ln(const XReal &x) {
  if (!(x.value() > 0)) throw Error(ErrorKind::Domain, "ln of non-positive argument");
  return XReal::raw(logq(x.value()));
}

XReal log1p(const XReal &x) {
  if (!(x.value() > -1)) throw Error(ErrorKind::Domain, "log1p argument <= -1");
  return XReal::raw(log1pq(x.value()));
}

XReal exp(const XReal &x) { return XReal::raw(expq(x.value())); }

XReal sqrt(const XReal &x) {
  if (x.value() < 0) throw Error(ErrorKind::Domain, "sqrt of negative argument");
  return XReal::raw(sqrtq(x.value()));
}

XReal atan(const XReal &x) { return XReal::raw(atanq(x.value())); }
XReal atan2(const XReal &y, const XReal &x) { return XReal::raw(atan2q(y.value(), x.value())); }
XReal sin(const XReal &x) { return XReal::raw(sinq(x.value())); }
XReal cos(const XReal &x) { return XReal::raw(cosq(x.value())); }
XReal tan(const XReal &x) { return XReal::raw(tanq(x.value())); }
XReal sinh(const XReal &x) { return XReal::raw(sinhq(x.value())); }
XReal cosh(const XReal &x) { return XReal::raw(coshq(x.value())); }
XReal tanh(const XReal &x) { return XReal::raw(tanhq(x.value())); }
XReal cbrt(const XReal &x) { return XReal::raw(cbrtq(x.value())); }
XReal ldexp(const XReal &x, int e) { return XReal::raw(ldexpq(x.value(), e)); }
bool isfinite(const XReal &x) { return finiteq(x.value()); }

XReal pow_int(const XReal &x, long n) {
  if (n < 0) return XReal(1) / pow_int(x, -n);
  XReal r(1), b = x;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

std::string to_string(const XReal &x, int digits) {
  if (digits < 1) digits = 1;
  if (digits > 36) digits = 36;
  char buf[128];
  quadmath_snprintf(buf, sizeof buf, "%.*Qe", digits - 1, x.value());
  return buf;
}

XReal parse_xreal(const std::string &s) {
  char *end = nullptr;
  q v = strtoflt128(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw Error(ErrorKind::Domain, "cannot parse '" + s + "'");
  return XReal::raw(v);
}

XReal machine_eps() { return XReal::raw(FLT128_EPSILON); }

XComplex operator/(const XComplex &a, const XComplex &b) {
  if (b.re == 0 && b.im == 0) throw Error(ErrorKind::DivisionByZero, "complex division by zero");
  // Smith's algorithm
  if (abs(b.re) >= abs(b.im)) {
    XReal r = b.im / b.re, d = b.re + b.im * r;
    return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
  }
  XReal r = b.re / b.im, d = b.re * r + b.im;
  return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}

XReal abs(const XComplex &z) { return XReal::raw(hypotq(z.re.value(), z.im.value())); }

XReal arg(const XComplex &z) {
  // -0 imaginary part on the negative axis still maps to +pi
  if (z.im == 0 && z.re < 0) return pi();
  return atan2(z.im, z.re);
}

XComplex ln(const XComplex &z) {
  if (z.re == 0 && z.im == 0) throw Error(ErrorKind::Domain, "ln of zero");
  return {ln(abs(z)), arg(z)};
}

XComplex exp(const XComplex &z) {
  XReal m = exp(z.re);
  return {m * cos(z.im), m * sin(z.im)};
}

XComplex atan(const XComplex &z) {
  // atan z = (i/2) (ln(1 - iz) - ln(1 + iz))
  XComplex iz{-z.im, z.re};
  XComplex d = ln(XComplex(1) - iz) - ln(XComplex(1) + iz);
  return {-d.im / 2, d.re / 2};
}

XComplex pow_int(const XComplex &z, long n) {
  if (n < 0) return XComplex(1) / pow_int(z, -n);
  XComplex r(1), b = z;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

Rational::Rational(long n, long d) {
  if (d == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  q_ = mpq_class(n, 1) / mpq_class(d, 1);
  q_.canonicalize();
}

Rational Rational::parse(const std::string &s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw Error(ErrorKind::Domain, "cannot parse rational '" + s + "'");
  if (sgn(v.get_den()) == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  v.canonicalize();
  return Rational(v);
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational division by zero");
  q_ /= o.q_;
  return *this;
}

XReal Rational::to_xreal() const {
  if (is_zero()) return XReal(0);
  mpf_class f(0, 256);
  f = q_;
  mp_exp_t e;
  std::string digits = f.get_str(e, 10, 45);
  bool neg = digits[0] == '-';
  if (neg) digits.erase(0, 1);
  std::string s = (neg ? "-0." : "0.") + digits + "e" + std::to_string(e);
  return parse_xreal(s);
}

XReal constant(Constant c) {
  const auto &k = constants();
  switch (c) {
    case Constant::Pi: return k.pi;
    case Constant::Ln2: return k.ln2;
    case Constant::EulerGamma: return k.gamma;
  }
  throw Error(ErrorKind::Domain, "unknown constant");
}

XReal constant(const std::string &name) {
  if (name == "pi") return constant(Constant::Pi);
  if (name == "ln2") return constant(Constant::Ln2);
  if (name == "euler_gamma") return constant(Constant::EulerGamma);
  throw Error(ErrorKind::UnknownId, "unknown constant '" + name + "'");
}

}  // namespace psilab
