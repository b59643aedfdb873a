/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "psilab/specfun.hpp"

#include <array>
#include <mutex>

#include <quadmath.h>

namespace psilab {

namespace {

// B_0 .. B_60, exact.
const char *const kBernoulli[kBernoulliMax + 1] = {
    "1", "-1/2", "1/6", "0",
    "-1/30", "0", "1/42", "0",
    "-1/30", "0", "5/66", "0",
    "-691/2730", "0", "7/6", "0",
    "-3617/510", "0", "43867/798", "0",
    "-174611/330", "0", "854513/138", "0",
    "-236364091/2730", "0", "8553103/6", "0",
    "-23749461029/870", "0", "8615841276005/14322", "0",
    "-7709321041217/510", "0", "2577687858367/6", "0",
    "-26315271553053477373/1919190", "0", "2929993913841559/6", "0",
    "-261082718496449122051/13530", "0", "1520097643918070802691/1806", "0",
    "-27833269579301024235023/690", "0", "596451111593912163277961/282", "0",
    "-5609403368997817686249127547/46410", "0", "495057205241079648212477525/66", "0",
    "-801165718135489957347924991853/1590", "0", "29149963634884862421418123812691/798", "0",
    "-2479392929313226753685415739663229/870", "0", "84483613348880041862046775994036021/354", "0",
    "-1215233140483755572040304994079820246041491/56786730"
};

struct BernoulliTable {
  std::vector<Rational> exact;
  std::vector<XReal> value;
  BernoulliTable() {
    for (int n = 0; n <= kBernoulliMax; ++n) {
      exact.push_back(Rational::parse(kBernoulli[n]));
      value.push_back(exact.back().to_xreal());
    }
  }
};

const BernoulliTable &btable() {
  static const BernoulliTable t;
  return t;
}

XReal bern(int n) { return btable().value[n]; }

// Coefficients of the series in u = -ln(1-z):
//   Li2(z) = sum_n B_n u^(n+1)/(n+1)!
//   Li3(z) = sum_n c_n u^(n+1)/(n+1)!,  c_n = sum_k C(n,k) B_k B_(n-k)/(k+1)
struct USeries {
  std::vector<XReal> li2, li3;
  USeries() {
    const auto &b = btable().exact;
    Rational fact(1);
    for (int n = 0; n <= kBernoulliMax; ++n) {
      fact *= Rational(n + 1);
      Rational c(0), binom(1);
      for (int k = 0; k <= n; ++k) {
        c += binom * b[k] * b[n - k] / Rational(k + 1);
        binom = binom * Rational(n - k) / Rational(k + 1);
      }
      li2.push_back((b[n] / fact).to_xreal());
      li3.push_back((c / fact).to_xreal());
    }
  }
};

const USeries &useries() {
  static const USeries u;
  return u;
}

const XReal kTiny = XReal::raw(1e-37Q);

}  // namespace

const Rational &bernoulli(int n) {
  if (n < 0 || n > kBernoulliMax) throw Error(ErrorKind::Domain, "bernoulli index out of table");
  return btable().exact[n];
}

Rational harmonic(long n) {
  if (n < 0) throw Error(ErrorKind::Domain, "harmonic of negative index");
  mpq_class h(0);
  for (long k = 1; k <= n; ++k) h += mpq_class(1, k);
  h.canonicalize();
  return Rational(h);
}

XReal digamma(const XReal &x0) {
  if (!(x0 > 0)) throw Error(ErrorKind::Domain, "digamma requires x > 0");
  XReal x = x0, acc(0);
  while (x < 20) {
    acc -= XReal(1) / x;
    x += 1;
  }
  XReal r = ln(x) - XReal(1) / (2 * x);
  XReal inv2 = XReal(1) / (x * x), p = inv2;
  for (int k = 1; 2 * k <= kBernoulliMax; ++k) {
    XReal t = bern(2 * k) / (2 * k) * p;
    r -= t;
    if (abs(t) < kTiny * abs(r)) break;
    p *= inv2;
  }
  return r + acc;
}

XReal polygamma(int n, const XReal &x0) {
  if (n < 1 || n > 4) throw Error(ErrorKind::Domain, "polygamma order must be in 1..4");
  if (!(x0 > 0)) throw Error(ErrorKind::Domain, "polygamma requires x > 0");
  XReal nfact(1);
  for (int i = 2; i <= n; ++i) nfact *= i;
  // S(x) = sum_{k>=0} (x+k)^-(n+1): direct terms until x >= 30, then Euler-Maclaurin
  XReal x = x0, s(0);
  while (x < 30) {
    s += pow_int(x, -(n + 1));
    x += 1;
  }
  XReal tail = pow_int(x, -n) / n + pow_int(x, -(n + 1)) / 2;
  XReal rising(n + 1), fact(2), pw = pow_int(x, -(n + 2)), inv2 = XReal(1) / (x * x);
  for (int j = 1; 2 * j <= kBernoulliMax; ++j) {
    XReal t = bern(2 * j) / fact * rising * pw;
    tail += t;
    if (abs(t) < kTiny * tail) break;
    rising *= XReal(n + 2 * j) * (n + 2 * j + 1);
    fact *= XReal(2 * j + 1) * (2 * j + 2);
    pw *= inv2;
  }
  XReal r = nfact * (s + tail);
  return (n % 2) ? r : -r;
}

XReal zeta_int(int s) {
  if (s < 2) throw Error(ErrorKind::Domain, "zeta_int requires s >= 2");
  XReal p = pi();
  if (s == 2) return p * p / 6;
  if (s == 3) return special_constant(SpecialConstant::Zeta3);
  if (s % 2 == 0) {
    if (s > kBernoulliMax) throw Error(ErrorKind::Domain, "zeta_int: s beyond Bernoulli table");
    XReal f(1);
    for (int i = 2; i <= s; ++i) f *= i;
    XReal v = abs(bern(s)) * pow_int(2 * p, s) / (2 * f);
    return v;
  }
  // direct sum plus Euler-Maclaurin tail
  const int N = 20;
  XReal sum(0);
  for (int k = N - 1; k >= 1; --k) sum += pow_int(XReal(k), -s);
  XReal Nx(N);
  XReal tail = pow_int(Nx, 1 - s) / (s - 1) + pow_int(Nx, -s) / 2;
  XReal rising(s), fact(2);
  XReal pw = pow_int(Nx, -s - 1);
  for (int j = 1; 2 * j <= kBernoulliMax; ++j) {
    XReal t = bern(2 * j) / fact * rising * pw;
    tail += t;
    if (abs(t) < kTiny * tail) break;
    rising *= XReal(s + 2 * j - 1) * (s + 2 * j);
    fact *= XReal(2 * j + 1) * (2 * j + 2);
    pw /= Nx * Nx;
  }
  return sum + tail;
}

XReal eta_int(int s) {
  if (s < 1) throw Error(ErrorKind::Domain, "eta_int requires s >= 1");
  if (s == 1) return ln2();
  return (XReal(1) - ldexp(XReal(1), 1 - s)) * zeta_int(s);
}

namespace {

// zeta(3) = 5/2 sum_{k>=1} (-1)^(k+1) / (k^3 C(2k,k))
XReal compute_zeta3() {
  XReal sum(0), binom(1);
  for (int k = 1; k < 200; ++k) {
    binom *= XReal(2 * (2 * k - 1)) / k;
    XReal t = XReal(1) / (pow_int(XReal(k), 3) * binom);
    sum += (k % 2) ? t : -t;
    if (t < kTiny) break;
  }
  return sum * 5 / 2;
}

// Lupas: G = 1/64 sum_{n>=1} (-1)^(n-1) 2^(8n) (40n^2-24n+3) (2n)!^3 n!^2 / (n^3 (2n-1) (4n)!^2)
XReal compute_catalan() {
  XReal sum(0), a(1);
  for (int n = 1; n < 200; ++n) {
    XReal num = XReal(2 * n) * (2 * n - 1);
    XReal den = XReal(4 * n) * (4 * n - 1) * (4 * n - 2) * (4 * n - 3);
    a *= XReal(256) * num * num * num * n * n / (den * den);
    XReal t = a * (40 * n * n - 24 * n + 3) / (pow_int(XReal(n), 3) * (2 * n - 1));
    sum += (n % 2) ? t : -t;
    if (t < kTiny) break;
  }
  return sum / 64;
}

struct SpecialCache {
  XReal g, z3, im;
  SpecialCache() {
    z3 = compute_zeta3();
    g = compute_catalan();
  }
};

const SpecialCache &special_cache() {
  static const SpecialCache c;
  return c;
}

}  // namespace

XReal special_constant(SpecialConstant c) {
  switch (c) {
    case SpecialConstant::CatalanG: return special_cache().g;
    case SpecialConstant::Zeta3: return special_cache().z3;
    case SpecialConstant::ImLi3OnePlusI: {
      static const XReal v = trilog(XComplex(1, 1)).im;
      return v;
    }
  }
  throw Error(ErrorKind::Domain, "unknown special constant");
}

namespace {

bool on_cut(const XComplex &z) { return z.im == 0 && z.re > 1; }
bool in_core(const XComplex &z) { return abs(z) <= 1 && z.re <= XReal(0.5); }

XComplex power_series(const XComplex &z, int s) {
  XComplex sum, p = z;
  for (long k = 1; k < 100000; ++k) {
    XReal ks = pow_int(XReal(k), s);
    XComplex t{p.re / ks, p.im / ks};
    sum += t;
    if (abs(t) < kTiny * abs(sum)) break;
    p *= z;
  }
  return sum;
}

XComplex u_series(const XComplex &z, const std::vector<XReal> &c) {
  XComplex u = -ln(XComplex(1) - z), p = u, sum;
  for (size_t n = 0; n < c.size(); ++n) {
    XComplex t{p.re * c[n], p.im * c[n]};
    sum += t;
    if (c[n] != 0 && abs(t) < kTiny * abs(sum)) break;
    p *= u;
  }
  return sum;
}

// Core region: |z| <= 1 and Re z <= 1/2.  Power series inside |z| <= 1/2,
// Bernoulli series in -ln(1-z) elsewhere (|ln(1-z)| stays below about 1.1 there).
XComplex li2_core(const XComplex &z) {
  if (abs(z) <= XReal(0.5)) return power_series(z, 2);
  return u_series(z, useries().li2);
}

XComplex li3_core(const XComplex &z) {
  if (abs(z) <= XReal(0.5)) return power_series(z, 3);
  return u_series(z, useries().li3);
}

XComplex scale(const XComplex &z, const XReal &s) { return {z.re * s, z.im * s}; }

// |z| > 1: Li3(z) = Li3(1/z) - ln^3(-z)/6 - pi^2/6 ln(-z), with 1/z in the core.
XComplex li3_inverted(const XComplex &z) {
  XComplex w = XComplex(1) / z;
  XComplex l = ln(-z);
  XReal p2 = pi() * pi();
  return li3_core(w) - scale(l * l * l, XReal(1) / 6) - scale(l, p2 / 6);
}

}  // namespace

XComplex dilog(const XComplex &z) {
  if (on_cut(z)) throw Error(ErrorKind::BranchCut, "dilog argument on the cut (1, inf)");
  XReal p2 = pi() * pi();
  if (z.im == 0 && z.re == 1) return {p2 / 6, XReal(0)};
  if (abs(z) > 1) {
    // inversion: Li2(z) = -Li2(1/z) - pi^2/6 - ln^2(-z)/2
    XComplex l = ln(-z);
    return -dilog(XComplex(1) / z) - XComplex(p2 / 6) - scale(l * l, XReal(0.5));
  }
  if (in_core(z)) return li2_core(z);
  // Euler reflection: Li2(z) = pi^2/6 - ln z ln(1-z) - Li2(1-z), with 1-z in the core
  XComplex w = XComplex(1) - z;
  return XComplex(p2 / 6) - ln(z) * ln(w) - li2_core(w);
}

XComplex trilog(const XComplex &z) {
  if (on_cut(z)) throw Error(ErrorKind::BranchCut, "trilog argument on the cut (1, inf)");
  if (z.im == 0 && z.re == 1) return {zeta3(), XReal(0)};
  if (abs(z) > 1) {
    XComplex w = XComplex(1) / z;
    if (in_core(w)) return li3_inverted(z);
    return trilog(w) - scale(ln(-z) * ln(-z) * ln(-z), XReal(1) / 6) - scale(ln(-z), pi() * pi() / 6);
  }
  if (in_core(z)) return li3_core(z);
  // three-term relation:
  //   Li3(z) + Li3(1-z) + Li3(z/(z-1)) = ln^2(1-z)(ln(1-z) - 3 ln z)/6 + pi^2/6 ln(1-z) + zeta(3)
  // 1-z lies in the core; z/(z-1) lies outside the unit disk and inverts to 1 - 1/z.
  XComplex w = XComplex(1) - z, lw = ln(w), lz = ln(z);
  XComplex rhs = scale(lw * lw * (lw - scale(lz, XReal(3))), XReal(1) / 6) +
                 scale(lw, pi() * pi() / 6) + XComplex(zeta3());
  XComplex v = z / (z - XComplex(1));
  return rhs - li3_core(w) - li3_inverted(v);
}

XReal f_psi(long k, long n) {
  if (k < 1 || n < 0) throw Error(ErrorKind::Domain, "f_psi requires k >= 1, n >= 0");
  XReal a = XReal(2 * k + 2 * n + 5) / 4, b = XReal(2 * k + 2 * n + 3) / 4;
  return digamma(a) - digamma(b);
}

XReal f_kernel(const XReal &x) {
  // psi(y + 1/2) - psi(y) for y = (2x+3)/4, evaluated without cancellation
  XReal y = (2 * x + 3) / 4;
  if (!(y > 0)) throw Error(ErrorKind::Domain, "f_kernel argument out of range");
  XReal acc(0);
  while (y < 20) {
    acc += XReal(1) / (2 * y * (y + XReal(0.5)));
    y += 1;
  }
  XReal h = XReal(1) / (2 * y);
  XReal l = log1p(h);
  XReal r = l + XReal(1) / (4 * y * (y + XReal(0.5)));
  XReal inv2 = XReal(1) / (y * y), p = inv2;
  for (int k = 1; 2 * k <= kBernoulliMax; ++k) {
    // (y+1/2)^-2k - y^-2k = y^-2k expm1(-2k log1p(1/(2y)))
    XReal d = XReal::raw(expm1q((-2 * k * l).value()));
    XReal t = bern(2 * k) / (2 * k) * p * d;
    r -= t;
    if (abs(t) < kTiny * abs(r)) break;
    p *= inv2;
  }
  return r + acc;
}

XReal FFinite::to_xreal() const { return rational_part.to_xreal() + pi_coeff.to_xreal() * pi(); }

FFinite f_finite(long k, long n) {
  if (k < 1 || n < 0) throw Error(ErrorKind::Domain, "f_finite requires k >= 1, n >= 0");
  // f(k,n) = f(k+n,0) = (-1)^(K-1) pi + 4 (-1)^K sum_{j=0}^{K} (-1)^j/(2j+1)
  long K = k + n;
  mpq_class s(0);
  for (long j = 0; j <= K; ++j) s += mpq_class(j % 2 ? -1 : 1, 2 * j + 1);
  s *= (K % 2) ? -4 : 4;
  s.canonicalize();
  return {Rational(s), Rational(K % 2 ? 1 : -1)};
}

XReal cot_pi_derivative(int order, const XReal &z) {
  // derivatives of c(z) = cot(pi z); with c' = -pi (1 + c^2) each order is a polynomial in c
  XReal p = pi(), c = cos(p * z) / sin(p * z), c2 = c * c;
  switch (order) {
    case 0: return c;
    case 1: return -p * (1 + c2);
    case 2: return 2 * p * p * c * (1 + c2);
    case 3: return -2 * p * p * p * (1 + c2) * (1 + 3 * c2);
    case 4: return 8 * pow_int(p, 4) * c * (1 + c2) * (2 + 3 * c2);
    case 5: return -8 * pow_int(p, 5) * (1 + c2) * (2 + 15 * c2 + 15 * c2 * c2);
  }
  throw Error(ErrorKind::Domain, "cot derivative order out of range");
}

}  // namespace psilab
