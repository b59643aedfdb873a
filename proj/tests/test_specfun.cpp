/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "oracle.hpp"
#include "psilab/specfun.hpp"

using namespace psilab;
using oracle::tol;
using oracle::X;

namespace {
XReal P() { return pi(); }
XComplex cx(const char *re, const char *im) { return XComplex(X(re), X(im)); }
}  // namespace

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0).is_zero());
  CHECK(harmonic(3) == Rational(11, 6));
  XReal h100 = harmonic(100).to_xreal();
  CHECK_NEAR(h100, ln(XReal(100)) + euler_gamma() + XReal(1) / 200 - XReal(1) / 120000, tol(8));
  CHECK_KIND(harmonic(-1), ErrorKind::Domain);
}

TEST_CASE("bernoulli") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  CHECK(bernoulli(13).is_zero());
}

TEST_CASE("digamma") {
  CHECK_NEAR(digamma(XReal(1)), -euler_gamma(), tol(32));
  CHECK_NEAR(digamma(XReal(0.5)), -euler_gamma() - 2 * ln2(), tol(32));
  CHECK_NEAR(digamma(XReal(6)), -euler_gamma() + Rational(137, 60).to_xreal(), tol(32));
  // mpmath, 50 digits
  CHECK_NEAR(digamma(X("0.3")), X("-3.5025242222001329889644945073719815995"), tol(31));
  CHECK_NEAR(digamma(X("37.25")), X("3.6041690730056271674704886173933548087"), tol(31));
  CHECK_KIND(digamma(XReal(0)), ErrorKind::Domain);
  CHECK_KIND(digamma(XReal(-1.5)), ErrorKind::Domain);
}

TEST_CASE("polygamma") {
  CHECK_NEAR(polygamma(1, XReal(1)), P() * P() / 6, tol(31));
  CHECK_NEAR(polygamma(1, XReal(0.5)), P() * P() / 2, tol(31));
  CHECK_REL(polygamma(1, X("0.7")), X("2.8340491566946106268456439810079186474"), tol(29));
  CHECK_REL(polygamma(3, X("0.7")), X("25.879149678427731566222027768090662825"), tol(29));
  CHECK_REL(polygamma(4, X("2.5")), X("-0.31375599950673136337542809687292720731"), tol(29));
  // reflection at n = 2, z = 1/4: -pi * (cot(pi z))'' = -pi * 2 pi^2 csc^2 cot = -4 pi^3
  CHECK_REL(polygamma(2, XReal(0.25)) - polygamma(2, XReal(0.75)), -4 * P() * P() * P(), tol(30));
  CHECK_KIND(polygamma(5, XReal(1)), ErrorKind::Domain);
  CHECK_KIND(polygamma(0, XReal(1)), ErrorKind::Domain);
  CHECK_KIND(polygamma(2, XReal(-0.5)), ErrorKind::Domain);
}

TEST_CASE("digamma identities") {
  for (double x : {0.3, 0.75, 1.25, 5.5, 19.9}) CHECK_NEAR(digamma(XReal(x) + 1) - digamma(XReal(x)), XReal(1) / XReal(x), tol(30));
  for (int i = 1; i <= 20; ++i) {
    XReal x = XReal(i) / 7;
    CHECK_NEAR(digamma(x + XReal(0.5)), 2 * digamma(2 * x) - digamma(x) - 2 * ln2(), tol(30));
  }
  for (int n = 0; n <= 4; ++n)
    for (XReal z : {XReal(1) / 4, XReal(1) / 3, XReal(2) / 5}) {
      auto pg = [n](const XReal &x) { return n == 0 ? digamma(x) : polygamma(n, x); };
      XReal lhs = pg(z) + (n % 2 ? pg(1 - z) : -pg(1 - z));
      CHECK_REL(lhs, -P() * cot_pi_derivative(n, z), tol(27));
    }
}

TEST_CASE("zeta and eta") {
  CHECK_NEAR(zeta_int(2), P() * P() / 6, tol(33));
  CHECK_NEAR(zeta_int(4), pow_int(P(), 4) / 90, tol(33));
  CHECK_NEAR(eta_int(1), ln2(), tol(33));
  CHECK_NEAR(zeta_int(3), X("1.2020569031595942853997381615114499908"), tol(32));
  CHECK_NEAR(zeta_int(5), X("1.0369277551433699263313654864570341681"), tol(31));
  CHECK_NEAR(zeta_int(7), X("1.0083492773819228268397975498497967596"), tol(31));
  CHECK_NEAR(eta_int(3), X("0.90154267736969571404980362113358749307"), tol(31));
  CHECK_KIND(zeta_int(1), ErrorKind::Domain);
  CHECK_KIND(eta_int(0), ErrorKind::Domain);
}

TEST_CASE("special constants") {
  CHECK(to_string(catalan(), 10) == "9.159655942e-01");
  CHECK(catalan() > X("0.9159655940"));
  CHECK(catalan() < X("0.9159655942"));
  CHECK(im_li3_1pi() > X("1.2670834418"));
  CHECK(im_li3_1pi() < X("1.2670834420"));
  CHECK(zeta3() > X("1.2020569031"));
  CHECK(zeta3() < X("1.2020569033"));
  CHECK_NEAR(catalan(), X("0.91596559417721901505460351493238411077"), tol(32));
  CHECK_NEAR(im_li3_1pi(), X("1.2670834418889239636866502002134858759"), tol(31));
  // 8G = pi ln(2+sqrt3) + 3 sum 1/((2n+1)^2 C(2n,n)), an unrelated formula
  XReal s(0), c(1);
  for (long n = 0; n < 70; ++n) {
    if (n > 0) c = c * XReal(2 * (2 * n - 1)) / XReal(n);
    XReal d(2 * n + 1);
    s += XReal(1) / (d * d * c);
  }
  CHECK_NEAR(8 * catalan(), P() * ln(2 + sqrt(XReal(3))) + 3 * s, tol(30));
}

TEST_CASE("dilogarithm") {
  CHECK_NEAR(dilog(XComplex(XReal(0.5))).re, P() * P() / 12 - ln2() * ln2() / 2, tol(31));
  XComplex li = dilog(XComplex(XReal(0), XReal(1)));
  CHECK_NEAR(li.re, -P() * P() / 48, tol(31));
  CHECK_NEAR(li.im, catalan(), tol(31));
  XComplex r = dilog(XComplex(XReal(1), XReal(-1)));
  CHECK_NEAR(r.re, P() * P() / 16, tol(31));
  CHECK_NEAR(r.im, -(P() / 4 * ln2() + catalan()), tol(31));
  struct V {
    XComplex z;
    const char *re, *im;
  };
  for (const V &v : {V{cx("0.3", "0.4"), "0.26659686674274043416117576432380132760", "0.46136289181910897318911695919599860055"},
                     V{cx("-5", "0"), "-2.7492791260608082900255875153762686445", "0"},
                     V{cx("2", "3"), "-0.28098805537806049090019219999989013814", "3.0172512063694065835165966206549926888"},
                     V{cx("0.9", "-0.05"), "1.2898324980216133607597397603417401540", "-0.12612490025403633376347226971898300165"}}) {
    XComplex d = dilog(v.z);
    CHECK_NEAR(d.re, X(v.re), tol(30));
    CHECK_NEAR(d.im, X(v.im), tol(30));
  }
  CHECK_NEAR(dilog(XComplex(XReal(1))).re, P() * P() / 6, tol(31));
  CHECK_KIND(dilog(XComplex(XReal(2))), ErrorKind::BranchCut);
}

TEST_CASE("trilogarithm") {
  XReal l = ln2();
  CHECK_NEAR(trilog(XComplex(XReal(0.5))).re, l * l * l / 6 - P() * P() * l / 12 + 7 * zeta3() / 8, tol(31));
  XComplex ti = trilog(XComplex(XReal(0), XReal(1)));
  CHECK_NEAR(ti.re, -3 * zeta3() / 32, tol(31));
  CHECK_NEAR(ti.im, P() * P() * P() / 32, tol(31));
  XComplex sum = trilog(XComplex(XReal(1), XReal(-1))) + trilog(XComplex(XReal(1), XReal(1)));
  CHECK_NEAR(sum.re, P() * P() * l / 16 + 35 * zeta3() / 32, tol(30));
  CHECK_NEAR(sum.im, XReal(0), tol(31));
  // real part: the ln 2 term enters with a plus sign
  CHECK_NEAR(trilog(XComplex(XReal(1), XReal(1))).re, P() * P() * l / 32 + 35 * zeta3() / 64, tol(30));
  CHECK_NEAR(trilog(XComplex(XReal(1), XReal(1))).re, X("0.87115888341093801685446553063763971593"), tol(30));
  struct V {
    XComplex z;
    const char *re, *im;
  };
  for (const V &v : {V{cx("0.9", "0"), "1.0496589501864398696458324932101000704", "0"},
                     V{cx("-3", "0.5"), "-2.3564498737806637961790210260350098728", "0.32286829362282248840281279770623668368"},
                     V{cx("0", "5"), "-1.3616486981039789842140379495032142545", "3.7725953835436401796852932005724349227"},
                     V{cx("0.6", "0.6"), "0.57464002889851628148260570328722442169", "0.70155770901956629280317048074059842511"}}) {
    XComplex t = trilog(v.z);
    CHECK_NEAR(t.re, X(v.re), tol(30));
    CHECK_NEAR(t.im, X(v.im), tol(30));
  }
  CHECK_KIND(trilog(XComplex(XReal(1.5))), ErrorKind::BranchCut);
}

TEST_CASE("conjugation symmetry") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int i = 0; i < 50; ++i) {
    XComplex z(XReal(u(rng)), XReal(u(rng)));
    for (int s = 2; s <= 3; ++s) {
      XComplex a = s == 2 ? dilog(z) : trilog(z), b = s == 2 ? dilog(conj(z)) : trilog(conj(z));
      CHECK_NEAR(a.re, b.re, tol(30));
      CHECK_NEAR(a.im, -b.im, tol(30));
    }
  }
}

TEST_CASE("kernel f(k,n)") {
  CHECK_NEAR(f_psi(1, 0), P() - XReal(8) / 3, tol(32));
  CHECK_NEAR(f_psi(2, 0), XReal(52) / 15 - P(), tol(32));
  CHECK(f_psi(1, 1).value() == f_psi(2, 0).value());
  CHECK_NEAR(f_psi(7, 3), X("0.090723155815799448863790073184913332541"), tol(32));
  FFinite a = f_finite(1, 0);
  CHECK(a.rational_part == Rational(-8, 3));
  CHECK(a.pi_coeff == Rational(1));
  FFinite b = f_finite(3, 0);
  // -pi + 4(1 - 1/3 + 1/5 - 1/7) would be negative; the kernel is positive
  CHECK(b.rational_part == Rational(-304, 105));
  CHECK(b.pi_coeff == Rational(1));
  CHECK(f_finite(2, 5).rational_part == f_finite(7, 0).rational_part);
  for (long n = 0; n <= 8; ++n)
    for (long k = 1; k <= 500; k += (k < 40 ? 1 : 23)) {
      CHECK(f_psi(k, n) > XReal(0));
      CHECK_NEAR(f_finite(k, n).to_xreal(), f_psi(k, n), tol(30));
    }
  CHECK_NEAR(f_kernel(XReal(7 + 3)), f_psi(7, 3), tol(33));
  CHECK_KIND(f_psi(0, 0), ErrorKind::Domain);
  CHECK_KIND(f_finite(1, -1), ErrorKind::Domain);
}
