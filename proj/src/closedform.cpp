/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "psilab/closedform.hpp"

#include <sstream>

#include "psilab/specfun.hpp"

namespace psilab {

namespace {

const char *const kNames[kBasisCount] = {"ONE", "PI",    "PI2", "PI3",  "LN2",  "PI_LN2SQ",
                                         "PI2_LN2", "ZETA3", "G",   "G_PI", "G_LN2", "IM_LI3"};

}  // namespace

const char *basis_name(Basis b) { return kNames[static_cast<int>(b)]; }

Basis basis_from_name(const std::string &name) {
  for (int i = 0; i < kBasisCount; ++i)
    if (name == kNames[i]) return static_cast<Basis>(i);
  throw Error(ErrorKind::Domain, "unknown basis tag '" + name + "'");
}

XReal basis_value(Basis b) {
  XReal p = pi(), l = ln2();
  switch (b) {
    case Basis::ONE: return XReal(1);
    case Basis::PI: return p;
    case Basis::PI2: return p * p;
    case Basis::PI3: return p * p * p;
    case Basis::LN2: return l;
    case Basis::PI_LN2SQ: return p * l * l;
    case Basis::PI2_LN2: return p * p * l;
    case Basis::ZETA3: return zeta3();
    case Basis::G: return catalan();
    case Basis::G_PI: return catalan() * p;
    case Basis::G_LN2: return catalan() * l;
    case Basis::IM_LI3: return im_li3_1pi();
  }
  throw Error(ErrorKind::Domain, "bad basis tag");
}

ClosedForm::ClosedForm(std::initializer_list<std::pair<Basis, Rational>> terms) {
  for (const auto &[b, c] : terms) add(b, c);
}

Rational ClosedForm::coeff(Basis b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ClosedForm::set(Basis b, const Rational &c) {
  if (c.is_zero())
    terms_.erase(b);
  else
    terms_[b] = c;
}

void ClosedForm::add(Basis b, const Rational &c) { set(b, coeff(b) + c); }

ClosedForm &ClosedForm::operator+=(const ClosedForm &o) {
  for (const auto &[b, c] : o.terms_) add(b, c);
  return *this;
}

ClosedForm &ClosedForm::operator-=(const ClosedForm &o) {
  for (const auto &[b, c] : o.terms_) add(b, -c);
  return *this;
}

ClosedForm ClosedForm::scaled(const Rational &s) const {
  ClosedForm r;
  for (const auto &[b, c] : terms_) r.set(b, c * s);
  return r;
}

bool ClosedForm::supported_on(std::initializer_list<Basis> tags) const {
  for (const auto &[b, c] : terms_) {
    bool ok = false;
    for (Basis t : tags) ok = ok || t == b;
    if (!ok) return false;
  }
  return true;
}

XReal ClosedForm::eval() const {
  XReal s(0);
  for (const auto &[b, c] : terms_) s += c.to_xreal() * basis_value(b);
  return s;
}

std::string ClosedForm::to_json() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto &[b, c] : terms_) {
    if (!first) os << ',';
    first = false;
    os << '"' << basis_name(b) << "\":\"" << c.str() << '"';
  }
  os << '}';
  return os.str();
}

std::string ClosedForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[b, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ')';
    if (b != Basis::ONE) os << '*' << basis_name(b);
  }
  return os.str();
}

namespace {

using R = Rational;
using B = Basis;

R r(long a, long b = 1) { return Rational(a, b); }
long sgn(long e) { return (e % 2 == 0) ? 1 : -1; }

template <class F>
R S(long lo, long hi, F fn) {
  R s(0);
  for (long j = lo; j <= hi; ++j) s += fn(j);
  return s;
}

R H(long n) { return harmonic(n); }

// sum_{j=1}^{n} (-1)^j/(2j+1)
R alt(long n) {
  return S(1, n, [](long j) { return r(sgn(j), 2 * j + 1); });
}

void require(bool ok, const char *what) {
  if (!ok) throw Error(ErrorKind::Domain, what);
}

ClosedForm tagged(ClosedForm c, const std::string &branch) {
  c.branch = branch;
  return c;
}

// Pieces of the odd and even branches of Theta1(n, 2m+1), M = (d-1)/2 resp. (d-2)/2.
R t1_odd_one(long M) {
  return r(3) -
         r(1, 8) * S(1, M, [](long j) { return r(4 * j + 1) * (H(2 * j - 1) - r(2) * H(4 * j - 1)) / r(j * j * (2 * j + 1) * (2 * j + 1)); }) -
         S(1, M, [](long j) { return r(1, (2 * j + 1) * (2 * j + 1) * (4 * j + 1)); });
}
R t1_odd_pi2(long M) {
  return (r(1) - r(1, 2) * S(1, M, [](long j) { return r(1, j * (2 * j + 1)); })) / r(4);
}
R t1_even_one(long M) {
  return r(-10, 3) -
         r(1, 8) * S(1, M, [](long j) { return r(4 * j + 3) * (H(2 * j - 1) - r(2) * H(4 * j - 1)) / r((j + 1) * (j + 1) * (2 * j + 1) * (2 * j + 1)); }) -
         S(1, M, [](long j) {
           return r(4 * j * j * j + j * j - 4 * j - 2) / (r((j + 1) * (j + 1) * (2 * j + 1) * (2 * j + 1)) * r((4 * j + 3) * (4 * j + 1)));
         });
}
R t1_even_pi2(long M) {
  return r(-1, 8) - r(1, 8) * S(1, M, [](long j) { return r(1, (j + 1) * (2 * j + 1)); });
}

// Theta1(n, 2m+1), d = n - m; m = 0 is the plain case.
ClosedForm theta1_odd(long n, long m) {
  require(m >= 0 && n >= m, "Theta1 odd alpha requires n >= m >= 0");
  long d = n - m;
  R pm = S(1, m, [](long j) { return r(sgn(j), (2 * j + 1) * (2 * j + 1)); });
  // sum_{k=1}^m sum_{j=0}^{k+off} s(k,j)/((2j+1)(2k+1)^2)
  auto dsum = [m](long off, auto sg) {
    return S(1, m, [&](long k) {
      return S(0, k + off, [&](long j) { return r(sg(k, j), (2 * j + 1) * (2 * k + 1) * (2 * k + 1)); });
    });
  };
  auto pjk = [](long k, long j) { return sgn(j + k); };
  if (d == 0)
    return tagged({{B::ONE, r(-4) - r(4) * dsum(0, pjk)}, {B::PI, r(1) + pm}, {B::G_PI, r(-1)},
                   {B::PI2_LN2, r(1, 4)}, {B::ZETA3, r(7, 4)}},
                  "n-m=0");
  if (d == 1)
    return tagged({{B::ONE, r(5, 3) + r(4) * dsum(1, pjk)}, {B::PI, -(r(1) + pm)}, {B::G_PI, r(1)},
                   {B::PI2, r(1, 4)}, {B::PI2_LN2, r(-1, 4)}, {B::ZETA3, r(-7, 4)}},
                  "n-m=1");
  if (d == 2)
    return tagged({{B::ONE, r(-14, 5) - r(4) * dsum(2, pjk)}, {B::PI, r(1) + pm}, {B::G_PI, r(-1)},
                   {B::PI2, r(-1, 8)}, {B::PI2_LN2, r(1, 4)}, {B::ZETA3, r(7, 4)}},
                  "n-m=2");
  R q = S(1, m, [d](long j) { return r(sgn(j + d - 1), (2 * j + 1) * (2 * j + 1)); });
  R dd = dsum(d, [d](long k, long j) { return sgn(k + d + j); });
  if (d % 2) {
    long M = (d - 1) / 2;
    return tagged({{B::ONE, t1_odd_one(M) - r(4) * dd + r(4) * alt(d)}, {B::PI, r(-1) - q}, {B::G_PI, r(1)},
                   {B::PI2, t1_odd_pi2(M)}, {B::PI2_LN2, r(-1, 4)}, {B::ZETA3, r(-7, 4)}},
                  "n-m odd");
  }
  long M = (d - 2) / 2;
  return tagged({{B::ONE, t1_even_one(M) - r(4) * dd - r(4) * alt(d)}, {B::PI, r(1) - q}, {B::G_PI, r(-1)},
                 {B::PI2, t1_even_pi2(M)}, {B::PI2_LN2, r(1, 4)}, {B::ZETA3, r(7, 4)}},
                "n-m even");
}

// Theta2(n, 2m+1) odd/even pieces.
R t2_odd_one(long M) {
  return r(5) - S(1, M, [](long j) { return r(1, 4 * j * j * (4 * j + 1)); }) +
         r(1, 4) * S(1, M, [](long k) {
           return S(0, 2 * k, [k](long j) {
             return r(sgn(j) * (8 * k * k + 4 * k + 1)) / (r(k * k * (2 * j + 1)) * r((2 * k + 1) * (2 * k + 1)));
           });
         });
}
R t2_even_one(long M) {
  return r(-4) + r(1, 4) * S(1, M, [](long j) { return r(1, j * j * (4 * j - 1)); }) -
         r(1, 4) * S(1, M, [](long k) {
           return S(0, 2 * k - 2, [k](long j) {
             return r(sgn(j) * (8 * k * k - 4 * k + 1)) / (r(k * k * (2 * j + 1)) * r((2 * k - 1) * (2 * k - 1)));
           });
         });
}

// Theta2(n, 2m+1); overall factor (-1)^m once m >= 1.
ClosedForm theta2_odd(long n, long m) {
  require(m >= 0 && n >= m, "Theta2 odd alpha requires n >= m >= 0");
  long d = n - m;
  R sq = S(1, m, [](long k) { return r(1, (2 * k + 1) * (2 * k + 1)); });
  auto dsum = [m](long off, auto sg) {
    return S(1, m, [&](long k) {
      return S(0, k + off, [&](long j) { return r(sg(j), (2 * j + 1) * (2 * k + 1) * (2 * k + 1)); });
    });
  };
  ClosedForm c;
  std::string br;
  if (d == 0) {
    c = {{B::ONE, r(-4) - r(4) * dsum(0, [](long j) { return sgn(j); })}, {B::PI, r(1) + sq},
         {B::PI_LN2SQ, r(-1, 4)}, {B::PI3, r(-1, 8)}, {B::IM_LI3, r(4)}};
    br = "n-m=0";
  } else if (d == 1) {
    c = {{B::ONE, r(11, 3) + r(4) * dsum(1, [](long j) { return sgn(j); })}, {B::PI, r(-3, 2) - sq},
         {B::PI_LN2SQ, r(1, 4)}, {B::PI3, r(1, 8)}, {B::G, r(2)}, {B::IM_LI3, r(-4)}};
    br = "n-m=1";
  } else if (d % 2) {
    long M = (d - 1) / 2;
    R dd = dsum(d, [d](long j) { return sgn(j + d); });
    c = {{B::ONE, t2_odd_one(M) - r(4) * dd + r(4) * alt(d)},
         {B::G, r(2) - S(1, M, [](long j) { return r(1, j * (2 * j + 1)); })},
         {B::PI, r(-3, 2) + r(sgn(d)) * sq - r(1, 2) * S(1, M, [](long j) { return r(1, (2 * j + 1) * (2 * j + 1)); })},
         {B::PI_LN2SQ, r(1, 4)}, {B::PI3, r(1, 8)}, {B::IM_LI3, r(-4)}};
    br = "n-m odd";
  } else {
    long M = d / 2;
    R dd = dsum(d, [d](long j) { return sgn(j + d); });
    c = {{B::ONE, t2_even_one(M) - r(4) * dd - r(4) * alt(d)},
         {B::PI, r(1) + r(sgn(d)) * sq + r(1, 2) * S(1, M, [](long j) { return r(1, (2 * j - 1) * (2 * j - 1)); })},
         {B::PI_LN2SQ, r(-1, 4)}, {B::PI3, r(-1, 8)},
         {B::G, -S(1, M, [](long j) { return r(1, j * (2 * j - 1)); })}, {B::IM_LI3, r(4)}};
    br = "n-m even";
  }
  return tagged(c.scaled(r(sgn(m))), br);
}

// Shared pieces of the Theta1(n, 2m) branches: (ONE, PI2, LN2) contributions.
struct Triple {
  R one, pi2, ln2;
};
Triple odd6(long M) {
  return {r(16) * S(1, M, [](long j) { return r(2 * j + 1) * (r(2) * H(4 * j + 1) - H(2 * j)) / r((4 * j + 3) * (4 * j + 3) * (4 * j + 1) * (4 * j + 1)); }) -
              r(4) * S(1, M, [](long j) { return r(1, (4 * j + 3) * (4 * j + 3) * (4 * j + 3)); }),
          -(r(1, 9) + r(1, 3) * S(1, M, [](long j) { return r(1, (4 * j + 3) * (4 * j + 1)); })),
          -(r(32, 9) + r(32) * S(1, M, [](long j) { return r(2 * j + 1, (4 * j + 3) * (4 * j + 3) * (4 * j + 1) * (4 * j + 1)); }))};
}
Triple even6(long M) {
  return {r(32) * S(0, M, [](long j) { return r(j + 1) * (r(2) * H(4 * j + 3) - H(2 * j + 1)) / r((4 * j + 5) * (4 * j + 5) * (4 * j + 3) * (4 * j + 3)); }) -
              r(4) * S(0, M, [](long j) { return r(1, (4 * j + 5) * (4 * j + 5) * (4 * j + 5)); }),
          r(1, 6) - r(1, 3) * S(0, M, [](long j) { return r(1, (4 * j + 5) * (4 * j + 3)); }),
          r(4) - r(64) * S(0, M, [](long j) { return r(j + 1, (4 * j + 5) * (4 * j + 5) * (4 * j + 3) * (4 * j + 3)); })};
}

// Theta1(n, 2m), d = n - m.
ClosedForm theta1_even(long n, long m) {
  require(m >= 0 && n >= m, "Theta1 even alpha requires n >= m >= 0");
  long d = n - m;
  auto dd = [m, d](long off) {
    return S(1, m, [&](long k) { return S(0, k + off, [&](long j) { return r(sgn(k + j + d), k * k * (2 * j + 1)); }); });
  };
  R pk = S(1, m, [](long k) { return r(sgn(k), 4 * k * k); });
  if (d == 0)
    return tagged({{B::ONE, r(-4) - dd(0)}, {B::LN2, r(4)}, {B::PI, pk}, {B::PI_LN2SQ, r(-1, 2)}, {B::PI2, r(1, 6)},
                   {B::PI3, r(-11, 48)}, {B::G_LN2, r(-4)}, {B::IM_LI3, r(8)}},
                  "n-m=0");
  if (d == 1)
    return tagged({{B::ONE, r(92, 27) - dd(1)}, {B::PI, -pk}, {B::PI_LN2SQ, r(1, 2)}, {B::PI2, r(-1, 9)},
                   {B::PI3, r(11, 48)}, {B::G_LN2, r(4)}, {B::LN2, r(-32, 9)}, {B::IM_LI3, r(-8)}},
                  "n-m=1");
  if (d % 2) {
    Triple t = odd6((d - 1) / 2);
    return tagged({{B::ONE, r(92, 27) + t.one - dd(d)}, {B::PI, r(sgn(d)) * pk}, {B::PI_LN2SQ, r(1, 2)},
                   {B::PI2, t.pi2}, {B::LN2, t.ln2}, {B::PI3, r(11, 48)}, {B::G_LN2, r(4)}, {B::IM_LI3, r(-8)}},
                  "n-m odd");
  }
  Triple t = even6((d - 2) / 2);
  return tagged({{B::ONE, r(-4) + t.one - dd(d)}, {B::PI, r(sgn(d)) * pk}, {B::PI_LN2SQ, r(-1, 2)},
                 {B::PI2, t.pi2}, {B::LN2, t.ln2}, {B::PI3, r(-11, 48)}, {B::G_LN2, r(-4)}, {B::IM_LI3, r(8)}},
                "n-m even");
}

// Shared pieces of the Theta2(n, 2m) branches: (ONE, PI, LN2, PI2).
struct Quad {
  R one, pi, ln2, pi2;
};
Quad odd8(long M) {
  return {r(8) * S(1, M, [](long k) {
            return S(0, 2 * k, [k](long j) {
              return r(sgn(j) * (16 * k * k + 16 * k + 5)) / (r(2 * j + 1) * r((4 * k + 3) * (4 * k + 3) * (4 * k + 1) * (4 * k + 1)));
            });
          }) - r(4) * S(1, M, [](long j) { return r(1, (4 * j + 3) * (4 * j + 3) * (4 * j + 3)); }),
          r(-10, 9) - S(1, M, [](long j) { return r(2 * (16 * j * j + 16 * j + 5), (4 * j + 3) * (4 * j + 3) * (4 * j + 1) * (4 * j + 1)); }),
          r(-16) * (r(1, 9) + S(1, M, [](long j) { return r(2 * j + 1, (4 * j + 3) * (4 * j + 3) * (4 * j + 1) * (4 * j + 1)); })),
          r(1, 18) + r(1, 6) * S(1, M, [](long j) { return r(1, (4 * j + 3) * (4 * j + 1)); })};
}
Quad even8(long M) {
  return {r(-8) * S(0, M, [](long k) {
            return S(0, 2 * k + 1, [k](long j) {
              return r(sgn(j) * (16 * k * k + 32 * k + 17)) / (r(2 * j + 1) * r((4 * k + 5) * (4 * k + 5) * (4 * k + 3) * (4 * k + 3)));
            });
          }) - r(4) * S(0, M, [](long j) { return r(1, (4 * j + 5) * (4 * j + 5) * (4 * j + 5)); }),
          r(1) + S(0, M, [](long j) { return r(2 * (16 * j * j + 32 * j + 17), (4 * j + 5) * (4 * j + 5) * (4 * j + 3) * (4 * j + 3)); }),
          r(2) * (r(1) - r(16) * S(0, M, [](long j) { return r(j + 1, (4 * j + 5) * (4 * j + 5) * (4 * j + 3) * (4 * j + 3)); })),
          (r(-1, 2) + S(0, M, [](long j) { return r(1, (4 * j + 5) * (4 * j + 3)); })) / r(6)};
}

// Theta2(n, 2m); overall factor (-1)^m once m >= 1.
ClosedForm theta2_even(long n, long m) {
  require(m >= 0 && n >= m, "Theta2 even alpha requires n >= m >= 0");
  long d = n - m;
  auto dd = [m, d](long off) {
    return S(1, m, [&](long k) { return S(0, k + off, [&](long j) { return r(sgn(j + d), k * k * (2 * j + 1)); }); });
  };
  R q = S(1, m, [](long k) { return r(1, 4 * k * k); });
  ClosedForm c;
  std::string br;
  if (d == 0) {
    c = {{B::ONE, r(-4) - dd(0)}, {B::PI, r(1) + q}, {B::LN2, r(2)}, {B::PI_LN2SQ, r(-1, 4)}, {B::PI2, r(-1, 12)},
         {B::PI3, r(-5, 48)}, {B::G_LN2, r(-2)}, {B::IM_LI3, r(4)}};
    br = "n-m=0";
  } else if (d == 1) {
    c = {{B::ONE, r(116, 27) - dd(1)}, {B::PI, -(r(10, 9) + q)}, {B::LN2, r(-16, 9)}, {B::PI_LN2SQ, r(1, 4)},
         {B::PI2, r(1, 18)}, {B::PI3, r(5, 48)}, {B::G_LN2, r(2)}, {B::IM_LI3, r(-4)}};
    br = "n-m=1";
  } else if (d % 2) {
    Quad t = odd8((d - 1) / 2);
    c = {{B::ONE, r(116, 27) + t.one - dd(d)}, {B::PI, t.pi + r(sgn(d)) * q}, {B::LN2, t.ln2}, {B::PI2, t.pi2},
         {B::PI_LN2SQ, r(1, 4)}, {B::PI3, r(5, 48)}, {B::G_LN2, r(2)}, {B::IM_LI3, r(-4)}};
    br = "n-m odd";
  } else {
    Quad t = even8((d - 2) / 2);
    c = {{B::ONE, r(-4) + t.one - dd(d)}, {B::PI, t.pi + r(sgn(d)) * q}, {B::LN2, t.ln2}, {B::PI2, t.pi2},
         {B::PI_LN2SQ, r(-1, 4)}, {B::PI3, r(-5, 48)}, {B::G_LN2, r(-2)}, {B::IM_LI3, r(4)}};
    br = "n-m even";
  }
  return tagged(c.scaled(r(sgn(m))), br);
}

R w(long k) { return r(sgn(k), 2) - r(1); }

// weighted sums with shifted argument: plus = false takes mm = 2m terms, plus = true mm = 2m-1; d = n - mm.
ClosedForm weighted_general(long n, long mm, bool plus) {
  long d = n - mm;
  R sign = plus ? r(1) : r(-1);
  auto dd = [mm](long off, long par) {
    return S(1, mm, [&](long k) {
      return S(0, k + off, [&](long j) { return r(sgn(j + par)) * w(k) / r(k * k * (2 * j + 1)); });
    });
  };
  R q = S(1, mm, [](long k) { return w(k) / r(4 * k * k); });
  if (d == 0)
    return tagged({{B::ONE, r(2) - dd(0, 0)}, {B::PI, r(-1) + q}, {B::PI2, r(1, 6)}, {B::PI3, r(-1, 96)}}, "n-2m=0");
  if (d == 1)
    return tagged({{B::ONE, r(-70, 27) + dd(1, 0)}, {B::PI, r(10, 9) - q}, {B::PI2, r(-1, 9)}, {B::PI3, r(1, 96)}}, "n-2m=1");
  if (d % 2) {
    long M = (d - 1) / 2;
    R one = r(-70, 27) +
            r(8) * S(1, M, [](long j) { return r(2 * j + 1) * (r(2) * H(4 * j + 1) - H(2 * j)) / r((4 * j + 3) * (4 * j + 3) * (4 * j + 1) * (4 * j + 1)); }) +
            r(2) * S(1, M, [](long j) { return r(1, (4 * j + 3) * (4 * j + 3) * (4 * j + 3)); }) + sign * dd(d, n) -
            r(8) * S(1, M, [](long k) {
              return S(0, 2 * k, [k](long j) {
                return r(sgn(j) * (16 * k * k + 16 * k + 5)) / (r(2 * j + 1) * r((4 * k + 3) * (4 * k + 3) * (4 * k + 1) * (4 * k + 1)));
              });
            });
    R p = r(10, 9) + S(1, M, [](long j) { return r(2 * (16 * j * j + 16 * j + 5), (4 * j + 3) * (4 * j + 3) * (4 * j + 1) * (4 * j + 1)); }) -
          sign * r(sgn(n)) * q;
    return tagged({{B::ONE, one}, {B::PI, p},
                   {B::PI2, -(r(1, 9) + r(1, 3) * S(1, M, [](long j) { return r(1, (4 * j + 3) * (4 * j + 1)); }))},
                   {B::PI3, r(1, 96)}},
                  "n-2m odd");
  }
  long M = (d - 2) / 2;
  // the first sum starts at j = 0 (follows from the even-index Theta1/Theta2 forms)
  R one = r(2) +
          r(16) * S(0, M, [](long j) { return r(j + 1) * (r(2) * H(4 * j + 3) - H(2 * j + 1)) / r((4 * j + 5) * (4 * j + 5) * (4 * j + 3) * (4 * j + 3)); }) +
          r(2) * S(0, M, [](long j) { return r(1, (4 * j + 5) * (4 * j + 5) * (4 * j + 5)); }) + sign * dd(d, n) +
          r(8) * S(0, M, [](long k) {
            return S(0, 2 * k + 1, [k](long j) {
              return r(sgn(j) * (16 * k * k + 32 * k + 17)) / (r(2 * j + 1) * r((4 * k + 5) * (4 * k + 5) * (4 * k + 3) * (4 * k + 3)));
            });
          });
  R p = r(-1) - S(0, M, [](long j) { return r(2 * (16 * j * j + 32 * j + 17), (4 * j + 5) * (4 * j + 5) * (4 * j + 3) * (4 * j + 3)); }) -
        sign * r(sgn(n)) * q;
  return tagged({{B::ONE, one}, {B::PI, p},
                 {B::PI2, (r(1, 2) - S(0, M, [](long j) { return r(1, (4 * j + 5) * (4 * j + 3)); })) / r(3)},
                 {B::PI3, r(-1, 96)}},
                "n-2m even");
}

ClosedForm thm10(long n) {
  require(n >= 0, "Theorem 10 requires n >= 0");
  if (n == 0) return tagged({{B::ONE, r(2)}, {B::PI, r(-1)}, {B::PI2, r(1, 6)}, {B::PI3, r(-1, 96)}}, "n=0");
  if (n == 1) return tagged({{B::ONE, r(-70, 27)}, {B::PI, r(10, 9)}, {B::PI2, r(-1, 9)}, {B::PI3, r(1, 96)}}, "n=1");
  // the odd and even general branches coincide with the mm = 0 case of the weighted formula
  ClosedForm c = weighted_general(n, 0, false);
  c.branch = (n % 2) ? "n odd" : "n even";
  return c;
}

}  // namespace

ClosedForm rhs_theta1(long n, long alpha) {
  require(alpha >= 0, "alpha must be non-negative");
  return (alpha % 2) ? theta1_odd(n, (alpha - 1) / 2) : theta1_even(n, alpha / 2);
}

ClosedForm rhs_theta2(long n, long alpha) {
  require(alpha >= 0, "alpha must be non-negative");
  return (alpha % 2) ? theta2_odd(n, (alpha - 1) / 2) : theta2_even(n, alpha / 2);
}

ClosedForm rhs_theta1_odd(long n, long m) { return theta1_odd(n, m); }
ClosedForm rhs_theta2_odd(long n, long m) { return theta2_odd(n, m); }
ClosedForm rhs_theta1_even(long n, long m) { return theta1_even(n, m); }
ClosedForm rhs_theta2_even(long n, long m) { return theta2_even(n, m); }

ClosedForm rhs_theorem1(long n) {
  require(n >= 0, "Theorem 1 requires n >= 0");
  if (n == 0)
    return tagged({{B::ONE, r(-4)}, {B::PI, r(1)}, {B::G_PI, r(-1)}, {B::PI2_LN2, r(1, 4)}, {B::ZETA3, r(7, 4)}}, "n=0");
  if (n == 1)
    return tagged({{B::ONE, r(5, 3)}, {B::PI, r(-1)}, {B::G_PI, r(1)}, {B::PI2, r(1, 4)}, {B::PI2_LN2, r(-1, 4)},
                   {B::ZETA3, r(-7, 4)}},
                  "n=1");
  if (n == 2)
    return tagged({{B::ONE, r(-14, 5)}, {B::PI, r(1)}, {B::G_PI, r(-1)}, {B::PI2_LN2, r(1, 4)}, {B::PI2, r(-1, 8)},
                   {B::ZETA3, r(7, 4)}},
                  "n=2");
  if (n % 2) {
    long M = (n - 1) / 2;
    return tagged({{B::ONE, t1_odd_one(M) + r(4) * alt(n)}, {B::PI, r(-1)}, {B::G_PI, r(1)}, {B::PI2, t1_odd_pi2(M)},
                   {B::PI2_LN2, r(-1, 4)}, {B::ZETA3, r(-7, 4)}},
                  "n odd");
  }
  long M = (n - 2) / 2;
  return tagged({{B::ONE, t1_even_one(M) - r(4) * alt(n)}, {B::PI, r(1)}, {B::G_PI, r(-1)}, {B::PI2, t1_even_pi2(M)},
                 {B::PI2_LN2, r(1, 4)}, {B::ZETA3, r(7, 4)}},
                "n even");
}

ClosedForm rhs_theorem2(long n) {
  require(n >= 0, "Theorem 2 requires n >= 0");
  if (n == 0)
    return tagged({{B::ONE, r(-4)}, {B::PI, r(1)}, {B::PI_LN2SQ, r(-1, 4)}, {B::PI3, r(-1, 8)}, {B::IM_LI3, r(4)}}, "n=0");
  if (n == 1)
    return tagged({{B::ONE, r(11, 3)}, {B::PI, r(-3, 2)}, {B::PI_LN2SQ, r(1, 4)}, {B::PI3, r(1, 8)}, {B::G, r(2)},
                   {B::IM_LI3, r(-4)}},
                  "n=1");
  if (n % 2) {
    long M = (n - 1) / 2;
    return tagged({{B::ONE, t2_odd_one(M) + r(4) * alt(n)},
                   {B::G, r(2) - S(1, M, [](long j) { return r(1, j * (2 * j + 1)); })},
                   {B::PI, -(r(3) + S(1, M, [](long j) { return r(1, (2 * j + 1) * (2 * j + 1)); })) / r(2)},
                   {B::PI_LN2SQ, r(1, 4)}, {B::PI3, r(1, 8)}, {B::IM_LI3, r(-4)}},
                  "n odd");
  }
  long M = n / 2;
  return tagged({{B::ONE, t2_even_one(M) - r(4) * alt(n)},
                 {B::PI, r(1) + r(1, 2) * S(1, M, [](long j) { return r(1, (2 * j - 1) * (2 * j - 1)); })},
                 {B::PI_LN2SQ, r(-1, 4)}, {B::PI3, r(-1, 8)},
                 {B::G, -S(1, M, [](long j) { return r(1, j * (2 * j - 1)); })}, {B::IM_LI3, r(4)}},
                "n even");
}

ClosedForm rhs_weighted(long n, long m, Weighted variant) {
  switch (variant) {
    case Weighted::Thm10:
      return thm10(n);
    case Weighted::Thm11:
      require(m >= 1 && n >= 2 * m, "weighted sum (minus) requires m >= 1 and n >= 2m");
      return weighted_general(n, 2 * m, false);
    case Weighted::Thm12:
      require(m >= 1 && n >= 2 * m - 1, "weighted sum (plus) requires m >= 1 and n >= 2m-1");
      return weighted_general(n, 2 * m - 1, true);
  }
  throw Error(ErrorKind::Domain, "unknown weighted variant");
}

ClosedForm rhs_away(long n) {
  require(n >= 0, "away series requires n >= 0");
  if (n == 0)
    return tagged({{B::ONE, r(-4)}, {B::PI2, r(2, 3)}, {B::PI3, r(-1, 6)}, {B::G_LN2, r(-2)}, {B::PI_LN2SQ, r(-1, 4)},
                   {B::IM_LI3, r(4)}},
                  "n=0");
  if (n == 1)
    return tagged({{B::ONE, r(86, 27)}, {B::PI2, r(-4, 9)}, {B::PI3, r(1, 6)}, {B::G_LN2, r(2)}, {B::PI_LN2SQ, r(1, 4)},
                   {B::IM_LI3, r(-4)}},
                  "n=1");
  if (n % 2) {
    long M = (n - 1) / 2;
    R one = r(86, 27) -
            r(2) * S(1, M, [](long j) { return r(8 * j + 5) / (r(2 * j + 1) * r((4 * j + 3) * (4 * j + 3) * (4 * j + 3))); }) +
            r(32) * S(1, M, [](long j) { return r(2 * j + 1) * H(4 * j + 1) / r((4 * j + 3) * (4 * j + 3) * (4 * j + 1) * (4 * j + 1)); });
    return tagged({{B::ONE, one},
                   {B::PI2, -(r(4, 9) + r(4, 3) * S(1, M, [](long j) { return r(1, (4 * j + 3) * (4 * j + 1)); }))},
                   {B::PI3, r(1, 6)}, {B::G_LN2, r(2)}, {B::PI_LN2SQ, r(1, 4)}, {B::IM_LI3, r(-4)}},
                  "n odd");
  }
  long M = (n - 2) / 2;
  R one = r(-4) -
          S(0, M, [](long j) { return r(8 * j + 9) / (r(j + 1) * r((4 * j + 5) * (4 * j + 5) * (4 * j + 5))); }) +
          r(64) * S(0, M, [](long j) { return r(j + 1) * H(4 * j + 3) / r((4 * j + 5) * (4 * j + 5) * (4 * j + 3) * (4 * j + 3)); });
  return tagged({{B::ONE, one},
                 {B::PI2, r(2, 3) - r(4, 3) * S(0, M, [](long j) { return r(1, (4 * j + 5) * (4 * j + 3)); })},
                 {B::PI3, r(-1, 6)}, {B::G_LN2, r(-2)}, {B::PI_LN2SQ, r(-1, 4)}, {B::IM_LI3, r(4)}},
                "n even");
}

ClosedForm rhs_thm13(long n) {
  require(n >= 0, "Theorem 13 requires n >= 0");
  if (n == 0) return tagged({{B::ONE, r(2)}, {B::LN2, r(2)}, {B::PI2, r(-7, 12)}, {B::PI3, r(5, 96)}}, "n=0");
  if (n == 1) return tagged({{B::ONE, r(-40, 27)}, {B::LN2, r(-16, 9)}, {B::PI2, r(7, 18)}, {B::PI3, r(-5, 96)}}, "n=1");
  if (n % 2) {
    long M = (n - 1) / 2;
    R one = r(-40, 27) -
            r(8) * S(1, M, [](long j) { return r(2 * j + 1) * (r(2) * H(4 * j + 1) + H(2 * j)) / r((4 * j + 3) * (4 * j + 3) * (4 * j + 1) * (4 * j + 1)); }) +
            r(4) * S(1, M, [](long j) { return r(3 * j + 2) / (r(2 * j + 1) * r((4 * j + 3) * (4 * j + 3) * (4 * j + 3))); });
    return tagged({{B::ONE, one},
                   {B::PI2, r(7, 2) * (r(1, 9) + r(1, 3) * S(1, M, [](long j) { return r(1, (4 * j + 3) * (4 * j + 1)); }))},
                   {B::LN2, r(-16) * (r(1, 9) + S(1, M, [](long j) { return r(2 * j + 1, (4 * j + 3) * (4 * j + 3) * (4 * j + 1) * (4 * j + 1)); }))},
                   {B::PI3, r(-5, 96)}},
                  "n odd");
  }
  long M = (n - 2) / 2;
  R one = r(2) -
          r(16) * S(0, M, [](long j) { return r(j + 1) * (r(2) * H(4 * j + 3) + H(2 * j + 1)) / r((4 * j + 5) * (4 * j + 5) * (4 * j + 3) * (4 * j + 3)); }) +
          S(0, M, [](long j) { return r(6 * j + 7) / (r(j + 1) * r((4 * j + 5) * (4 * j + 5) * (4 * j + 5))); });
  return tagged({{B::ONE, one},
                 {B::PI2, r(-7, 2) * (r(1, 6) - r(1, 3) * S(0, M, [](long j) { return r(1, (4 * j + 5) * (4 * j + 3)); }))},
                 {B::LN2, r(2) * (r(1) - r(16) * S(0, M, [](long j) { return r(j + 1, (4 * j + 5) * (4 * j + 5) * (4 * j + 3) * (4 * j + 3)); }))},
                 {B::PI3, r(5, 96)}},
                "n even");
}

}  // namespace psilab
