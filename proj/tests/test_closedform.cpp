/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "json.hpp"
#include "oracle.hpp"
#include "psilab/closedform.hpp"
#include "psilab/specfun.hpp"

using namespace psilab;
using oracle::tol;
using oracle::X;
using B = Basis;

namespace {
Rational q(long a, long b = 1) { return Rational(a, b); }
ClosedForm pipoly(Rational a, Rational b, Rational c, Rational d) {
  return ClosedForm{{B::ONE, a}, {B::PI, b}, {B::PI2, c}, {B::PI3, d}};
}
}  // namespace

TEST_CASE("algebra") {
  ClosedForm a{{B::PI3, q(1, 32)}};
  CHECK((a - a).is_zero());
  CHECK(ClosedForm{{B::PI, q(0)}}.is_zero());
  CHECK_NEAR((ClosedForm{{B::G, q(1)}, {B::ONE, q(-1)}}).eval(), X("-0.0840344058227809849453964850676158892"), tol(32));
  CHECK_NEAR((ClosedForm{{B::PI, q(1)}}.scaled(q(1, 4)).eval()), pi() / 4, tol(34));
  ClosedForm b{{B::ONE, q(2)}, {B::LN2, q(-1, 3)}};
  CHECK((a + b - b) == a);
  CHECK((q(3) * b).coeff(B::LN2) == q(-1));
  CHECK(b.coeff(B::ZETA3).is_zero());
  CHECK(b.supported_on({B::ONE, B::LN2}));
  CHECK(!b.supported_on({B::ONE}));
  for (int i = 0; i < kBasisCount; ++i) CHECK(basis_from_name(basis_name(static_cast<Basis>(i))) == static_cast<Basis>(i));
  CHECK_NEAR(basis_value(B::IM_LI3), im_li3_1pi(), XReal(0));
  CHECK_NEAR(basis_value(B::PI_LN2SQ), pi() * ln2() * ln2(), tol(33));
}

TEST_CASE("json form") {
  ClosedForm f{{B::ONE, q(-4)}, {B::ZETA3, q(7, 4)}};
  auto j = nlohmann::json::parse(f.to_json());
  CHECK(j["ONE"] == "-4");
  CHECK(j["ZETA3"] == "7/4");
  CHECK(j.size() == 2);
}

TEST_CASE("alpha = 1 vectors") {
  CHECK(rhs_theta1_odd(0, 0) == ClosedForm{{B::ONE, q(-4)}, {B::PI, q(1)}, {B::G_PI, q(-1)}, {B::PI2_LN2, q(1, 4)}, {B::ZETA3, q(7, 4)}});
  CHECK(rhs_theta1_odd(1, 0) == ClosedForm{{B::ONE, q(5, 3)}, {B::PI, q(-1)}, {B::G_PI, q(1)}, {B::PI2, q(1, 4)},
                                           {B::PI2_LN2, q(-1, 4)}, {B::ZETA3, q(-7, 4)}});
  CHECK(rhs_theta2_odd(0, 0) == ClosedForm{{B::ONE, q(-4)}, {B::PI, q(1)}, {B::PI_LN2SQ, q(-1, 4)}, {B::PI3, q(-1, 8)}, {B::IM_LI3, q(4)}});
  CHECK(rhs_theta2_odd(1, 0) == ClosedForm{{B::ONE, q(11, 3)}, {B::PI, q(-3, 2)}, {B::PI_LN2SQ, q(1, 4)}, {B::PI3, q(1, 8)},
                                           {B::G, q(2)}, {B::IM_LI3, q(-4)}});
  for (long n = 0; n <= 8; ++n) {
    CHECK(rhs_theta1_odd(n, 0) == rhs_theorem1(n));
    CHECK(rhs_theta2_odd(n, 0) == rhs_theorem2(n));
    CHECK(rhs_theta1(n, 1) == rhs_theorem1(n));
  }
}

TEST_CASE("even alpha at n = 0") {
  CHECK(rhs_theta1_even(0, 0) == ClosedForm{{B::ONE, q(-4)}, {B::LN2, q(4)}, {B::PI_LN2SQ, q(-1, 2)}, {B::PI2, q(1, 6)},
                                            {B::PI3, q(-11, 48)}, {B::G_LN2, q(-4)}, {B::IM_LI3, q(8)}});
  CHECK(rhs_theta2_even(0, 0) == ClosedForm{{B::ONE, q(-4)}, {B::PI, q(1)}, {B::LN2, q(2)}, {B::PI_LN2SQ, q(-1, 4)},
                                            {B::PI2, q(-1, 12)}, {B::PI3, q(-5, 48)}, {B::G_LN2, q(-2)}, {B::IM_LI3, q(4)}});
}

TEST_CASE("numeric agreement with independent sums") {
  // values from mpmath nsum at 50 digits
  CHECK_NEAR(rhs_theta1(2, 3).eval(), X("0.020074863677485829228367597256725222252"), tol(28));
  CHECK_NEAR(rhs_theta2(2, 3).eval(), X("-0.0071259416346398454993581758239151059903"), tol(28));
  CHECK_NEAR(rhs_theta1(5, 0).eval(), X("0.051299422884644939434923289180056725603"), tol(28));
  CHECK_NEAR(rhs_theta2(5, 0).eval(), X("-0.029832423571140495962926718675104091444"), tol(28));
  CHECK_NEAR(rhs_away(3).eval(), X("0.32290480185653794212425645257427229366"), tol(28));
}

TEST_CASE("weighted examples") {
  CHECK(rhs_weighted(0, 0, Weighted::Thm10) == pipoly(q(2), q(-1), q(1, 6), q(-1, 96)));
  CHECK(rhs_weighted(2, 0, Weighted::Thm10) == pipoly(q(8804, 3375), q(-259, 225), q(13, 90), q(-1, 96)));
  CHECK(rhs_weighted(3, 0, Weighted::Thm10) == pipoly(q(-3167372, 1157625), q(12916, 11025), q(-38, 315), q(1, 96)));
  CHECK(rhs_weighted(4, 0, Weighted::Thm10) == pipoly(q(85428394, 31255875), q(-117469, 99225), q(263, 1890), q(-1, 96)));
  CHECK(rhs_weighted(6, 3, Weighted::Thm11) == pipoly(q(1073869873, 324324000), q(-42457, 28800), q(1, 6), q(-1, 96)));
  CHECK(rhs_weighted(7, 3, Weighted::Thm11) == pipoly(q(-681924389, 162162000), q(5073, 3200), q(-1, 9), q(1, 96)));
  CHECK(rhs_weighted(6, 2, Weighted::Thm11) == pipoly(q(6775331, 1716000), q(-46277, 28800), q(13, 90), q(-1, 96)));
  CHECK(rhs_weighted(7, 2, Weighted::Thm11) == pipoly(q(-78022319, 18393375), q(2296373, 1411200), q(-38, 315), q(1, 96)));
  CHECK(rhs_weighted(1, 1, Weighted::Thm12) == pipoly(q(3), q(-11, 8), q(1, 6), q(-1, 96)));
  CHECK(rhs_weighted(2, 1, Weighted::Thm12) == pipoly(q(-1051, 270), q(107, 72), q(-1, 9), q(1, 96)));
  CHECK(rhs_weighted(4, 1, Weighted::Thm12) == pipoly(q(-9234319, 2315250), q(136403, 88200), q(-38, 315), q(1, 96)));
  CHECK(rhs_weighted(5, 1, Weighted::Thm12) ==
        pipoly(q(1323415409, 343814625), q(-1237427, 793800), q(263, 1890), q(-1, 96)));
}

TEST_CASE("exact derivations") {
  for (long n = 0; n <= 10; ++n) {
    CHECK(rhs_weighted(n, 0, Weighted::Thm10) == q(1, 2) * rhs_theta1_even(n, 0) - rhs_theta2_even(n, 0));
    CHECK(rhs_thm13(n) == q(1, 2) * rhs_theta1_even(n, 0) - rhs_away(n));
    CHECK(rhs_thm13(n).supported_on({B::ONE, B::LN2, B::PI2, B::PI3}));
    CHECK(rhs_weighted(n, 0, Weighted::Thm10).supported_on({B::ONE, B::PI, B::PI2, B::PI3}));
    for (long m = 1; m <= 3; ++m) {
      if (n >= 2 * m) {
        ClosedForm w = rhs_weighted(n, m, Weighted::Thm11);
        CHECK(w == q(1, 2) * rhs_theta1_even(n, 2 * m) - rhs_theta2_even(n, 2 * m));
        CHECK(w.supported_on({B::ONE, B::PI, B::PI2, B::PI3}));
      }
      if (n >= 2 * m - 1) {
        ClosedForm w = rhs_weighted(n, m, Weighted::Thm12);
        CHECK(w == q(1, 2) * rhs_theta1_even(n, 2 * m - 1) + rhs_theta2_even(n, 2 * m - 1));
        CHECK(w.supported_on({B::ONE, B::PI, B::PI2, B::PI3}));
      }
    }
  }
}

TEST_CASE("away series closed form") {
  CHECK(rhs_thm13(0) == ClosedForm{{B::ONE, q(2)}, {B::LN2, q(2)}, {B::PI2, q(-7, 12)}, {B::PI3, q(5, 96)}});
  CHECK(rhs_thm13(2) == ClosedForm{{B::ONE, q(11 * 529, 3375)}, {B::LN2, q(11 * 570, 3375)}, {B::PI2, q(-91, 180)}, {B::PI3, q(5, 96)}});
  CHECK(rhs_thm13(3) == ClosedForm{{B::ONE, q(-4 * 457523, 1157625)}, {B::LN2, q(-4 * 525840, 1157625)}, {B::PI2, q(19, 45)},
                                   {B::PI3, q(-5, 96)}});
  CHECK(rhs_away(1) == ClosedForm{{B::ONE, q(86, 27)}, {B::PI2, q(-4, 9)}, {B::PI3, q(1, 6)}, {B::G_LN2, q(2)},
                                  {B::PI_LN2SQ, q(1, 4)}, {B::IM_LI3, q(-4)}});
}

TEST_CASE("domains") {
  CHECK_KIND(rhs_theta1_odd(1, 2), ErrorKind::Domain);
  CHECK_KIND(rhs_theta2_even(0, 1), ErrorKind::Domain);
  CHECK_KIND(rhs_weighted(1, 1, Weighted::Thm11), ErrorKind::Domain);
  CHECK_KIND(rhs_weighted(0, 1, Weighted::Thm12), ErrorKind::Domain);
  CHECK_KIND(rhs_away(-1), ErrorKind::Domain);
  CHECK(!rhs_theorem1(5).branch.empty());
}
