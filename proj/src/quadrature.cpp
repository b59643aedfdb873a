/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "psilab/quadrature.hpp"

#include <map>
#include <mutex>

#include "psilab/specfun.hpp"

namespace psilab {

namespace {

// Nodes on [-1,1] for t >= 0: s = tanh(pi/2 sinh t), c = 1 - s, w = pi/2 cosh t / cosh^2(pi/2 sinh t).
struct Node {
  XReal s, c, w;
};

const XReal kTMax(5.0);

struct NodeTables {
  // levels[L] holds the nodes first introduced at level L (t = odd multiples of 2^-L; level 0 is t = 0,1,2,...)
  std::vector<std::vector<Node>> levels;
  NodeTables() {
    XReal half_pi = pi() / 2;
    auto node = [&](const XReal &t) {
      XReal u = half_pi * sinh(t), ch = cosh(u);
      XReal c = exp(-u) / ch;  // 1 - tanh u, no cancellation
      return Node{XReal(1) - c, c, half_pi * cosh(t) / (ch * ch)};
    };
    for (int L = 0; L <= kMaxQuadLevel; ++L) {
      std::vector<Node> v;
      XReal h = ldexp(XReal(1), -L);
      for (long k = (L == 0 ? 0 : 1);; k += (L == 0 ? 1 : 2)) {
        XReal t = h * k;
        if (t > kTMax) break;
        v.push_back(node(t));
      }
      levels.push_back(std::move(v));
    }
  }
};

const NodeTables &tables() {
  static const NodeTables t;
  return t;
}

}  // namespace

QuadResult integrate(const IntegralSpec &spec, const XReal &eps, int max_level) {
  if (max_level < 1 || max_level > kMaxQuadLevel) throw Error(ErrorKind::Config, "quadrature level out of range");
  if (!(spec.b > spec.a)) throw Error(ErrorKind::Domain, "integration interval must satisfy a < b");
  const auto &tab = tables();
  XReal d = (spec.b - spec.a) / 2;
  QuadResult res;
  XReal abs_sum(0);

  auto eval = [&](const Point &p) {
    ++res.evaluations;
    try {
      return spec.f(p);
    } catch (const Error &e) {
      throw Error(e.kind(), std::string(e.what()) + " at x = " + to_string(p.x, 20) + " in " + spec.id);
    }
  };
  // contribution of one node pair (+t, -t); the t = 0 node is counted once
  auto pair_sum = [&](const Node &n, bool center) {
    XReal ds = d * n.c;  // distance to the nearer endpoint
    Point right{spec.b - ds, d * (1 + n.s), ds};
    XReal v = eval(right);
    if (center) {
      abs_sum += abs(v) * n.w;
      return v * n.w;
    }
    Point left{spec.a + ds, ds, d * (1 + n.s)};
    XReal u = eval(left);
    abs_sum += (abs(v) + abs(u)) * n.w;
    return (v + u) * n.w;
  };

  XReal sum(0);
  for (size_t i = 0; i < tab.levels[0].size(); ++i) sum += pair_sum(tab.levels[0][i], i == 0);
  XReal prev = sum * d;
  // roundoff floor for the error estimate
  XReal floor = abs_sum * d * machine_eps() * 64;
  for (int L = 1; L <= max_level; ++L) {
    for (const Node &n : tab.levels[L]) sum += pair_sum(n, false);
    XReal cur = sum * d * ldexp(XReal(1), -L);
    XReal diff = abs(cur - prev);
    XReal err = diff < floor ? floor : diff;
    res.level_errors.push_back(err);
    res.value = cur;
    res.levels_used = L;
    res.error_estimate = err;
    // below the roundoff floor further levels cannot help
    if (L >= 3 && (diff <= eps / 4 || diff <= floor)) return res;
    prev = cur;
  }
  throw NonConvergence("tanh-sinh did not converge for " + spec.id + " by level " + std::to_string(max_level),
                       res.value.value());
}

IntegralSpec restrict_to(const IntegralSpec &spec, const XReal &c, const XReal &d) {
  if (!(spec.a <= c && c < d && d <= spec.b)) throw Error(ErrorKind::Domain, "sub-interval outside the integration range");
  IntegralSpec s = spec;
  s.id = spec.id + "[" + to_string(c, 6) + "," + to_string(d, 6) + "]";
  s.a = c;
  s.b = d;
  XReal off_a = c - spec.a, off_b = spec.b - d;
  auto f = spec.f;
  s.f = [f, off_a, off_b](const Point &p) { return f(Point{p.x, off_a + p.xa, off_b + p.bx}); };
  return s;
}

namespace {

struct GLRule {
  std::vector<XReal> x, w;  // on [-1,1]
};

GLRule make_rule(int n) {
  GLRule r;
  XReal p = pi();
  for (int i = 1; i <= n; ++i) {
    XReal z = cos(p * (XReal(i) - XReal(0.25)) / (XReal(n) + XReal(0.5)));
    XReal pp;
    for (int it = 0; it < 100; ++it) {
      XReal p1(1), p2(0);
      for (int j = 1; j <= n; ++j) {
        XReal p3 = p2;
        p2 = p1;
        p1 = ((2 * j - 1) * z * p2 - (j - 1) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1);
      XReal dz = p1 / pp;
      z -= dz;
      if (abs(dz) < XReal::raw(1e-36Q)) break;
    }
    r.x.push_back(z);
    r.w.push_back(XReal(2) / ((1 - z * z) * pp * pp));
  }
  return r;
}

const GLRule &rule(int n) {
  static std::mutex mu;
  static std::map<int, GLRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

}  // namespace

XReal gauss_legendre(const Integrand &f, const XReal &a, const XReal &b, const XReal &da, const XReal &db, int order) {
  const GLRule &g = rule(order);
  XReal mid = (a + b) / 2;
  // breakpoints as distances from a (left half) and from b (right half)
  std::vector<std::pair<XReal, XReal>> panels;  // (lo, hi) as offsets from a
  std::vector<XReal> left{da}, right{db};
  XReal half = mid - a;
  while (left.back() * 2 < half) left.push_back(left.back() * 2);
  while (right.back() * 2 < half) right.push_back(right.back() * 2);
  XReal sum(0);
  auto panel = [&](const XReal &lo, const XReal &hi, bool from_a) {
    // offsets measured from a (from_a) or from b
    XReal c = (lo + hi) / 2, r = (hi - lo) / 2;
    for (size_t i = 0; i < g.x.size(); ++i) {
      XReal off = c + r * g.x[i];
      Point p = from_a ? Point{a + off, off, (b - a) - off} : Point{b - off, (b - a) - off, off};
      sum += g.w[i] * r * f(p);
    }
  };
  for (size_t i = 0; i + 1 < left.size(); ++i) panel(left[i], left[i + 1], true);
  panel(left.back(), half, true);
  for (size_t i = 0; i + 1 < right.size(); ++i) panel(right[i], right[i + 1], false);
  panel(right.back(), half, false);
  return sum;
}

namespace {

using B = Basis;
Rational r(long a, long b = 1) { return Rational(a, b); }

// ln x and ln(1-x) on (0,1) from whichever endpoint distance is accurate
XReal lnx(const Point &p) { return p.x < XReal(0.5) ? ln(p.xa) : log1p(-p.bx); }
XReal ln1m(const Point &p) { return p.x < XReal(0.5) ? log1p(-p.x) : ln(p.bx); }
XReal atanx_over_x(const XReal &x) {
  return x < XReal::raw(1e-12Q) ? XReal(1) - x * x / 3 : atan(x) / x;
}

IntegralSpec unit(const std::string &id, Integrand f, Singularity s) { return {id, std::move(f), XReal(0), XReal(1), s}; }

std::vector<IntegralEntry> build_integrals() {
  std::vector<IntegralEntry> v;
  auto add = [&](const std::string &id, Integrand f, Singularity s, ClosedForm cf, const std::string &anchor) {
    v.push_back({id, unit(id, std::move(f), s), std::move(cf), anchor});
  };
  add("Q1", [](const Point &p) { return atanx_over_x(p.x) * log1p(p.x * p.x); }, Singularity::None,
      {{B::PI3, r(1, 16)}, {B::G_LN2, r(1)}, {B::PI_LN2SQ, r(1, 8)}, {B::IM_LI3, r(-2)}},
      "Eq. (finalres551): pi^3/16 + G ln2 + pi/8 ln^2 2 - 2 Im Li3(1+i)");
  add("Q2", [](const Point &p) { return atanx_over_x(p.x) * log1p(p.x); }, Singularity::None,
      {{B::G_LN2, r(3, 2)}, {B::PI3, r(3, 32)}, {B::PI_LN2SQ, r(3, 16)}, {B::IM_LI3, r(-3)}},
      "Eq. (proofn2ab): 3G ln2/2 + 3pi^3/32 + 3pi/16 ln^2 2 - 3 Im Li3(1+i)");
  add("Q3", [](const Point &p) { return atanx_over_x(p.x) * ln1m(p); }, Singularity::LogAtB,
      {{B::IM_LI3, r(-1)}, {B::G_LN2, r(1, 2)}, {B::PI_LN2SQ, r(1, 16)}},
      "Eq. (anthmin2): -Im Li3(1+i) + G ln2/2 + pi/16 ln^2 2");
  add("Q4", [](const Point &p) { return p.x * atan(p.x) * lnx(p) / (1 + p.x * p.x); }, Singularity::LogAtA,
      {{B::PI3, r(-5, 64)}, {B::PI_LN2SQ, r(-1, 8)}, {B::IM_LI3, r(2)}},
      "Eq. (atanlnexsq): twice the integral is -5pi^3/32 - pi/4 ln^2 2 + 4 Im Li3(1+i)");
  add("Q5", [](const Point &p) { return lnx(p) * log1p(p.x * p.x) / (1 + p.x * p.x); }, Singularity::LogAtA,
      {{B::IM_LI3, r(-2)}, {B::G_LN2, r(-1)}, {B::PI3, r(3, 32)}, {B::PI_LN2SQ, r(1, 8)}},
      "Eq. (Harm2k4): -2 Im Li3(1+i) - G ln2 + 3pi^3/32 + pi/8 ln^2 2");
  ClosedForm q6{{B::G_PI, r(-1, 2)}, {B::ZETA3, r(23, 32)}};
  add("Q6", [](const Point &p) { return ln1m(p) * log1p(p.x * p.x) / p.x; }, Singularity::LogAtB, q6,
      "Eq. (lnpnexsq): -G pi/2 + 23/32 zeta(3)");
  add("Q7", [](const Point &p) { return ln1m(p) * log1p(p.x) / p.x; }, Singularity::LogAtB, {{B::ZETA3, r(-5, 8)}},
      "Eq. (hisol1): -5/8 zeta(3)");
  // zeta(3) - 3pi^2/32 ln2 - pi G/4 - (1/2) Q6
  ClosedForm q8 = ClosedForm{{B::ZETA3, r(1)}, {B::PI2_LN2, r(-3, 32)}, {B::G_PI, r(-1, 4)}} - q6.scaled(r(1, 2));
  add("Q8", [](const Point &p) { return p.x * lnx(p) * ln1m(p) / (1 + p.x * p.x); }, Singularity::LogBoth, q8,
      "Eq. (hisol3): zeta(3) - 3pi^2/32 ln2 - pi G/4 - (1/2) Q6");
  add("Q9", [](const Point &p) { return p.x * lnx(p) * (ln1m(p) + log1p(p.x)) / (1 + p.x * p.x); }, Singularity::LogBoth,
      {{B::ZETA3, r(13, 32)}, {B::PI2_LN2, r(-1, 16)}}, "Eq. (hisol4): 13/32 zeta(3) - pi^2/16 ln2");
  add("Q10",
      [](const Point &p) { return lnx(p) / (p.bx * (1 + p.x)); }, Singularity::LogAtA, {{B::PI2, r(-1, 8)}},
      "Eq. (hisol5): -3/4 zeta(2) = -pi^2/8");
  // theta on (0, pi/4); -pi/4 ln2 is outside the basis, so Q11 carries an expression instead
  v.push_back({"Q11", {"Q11", [](const Point &p) { return ln(cos(p.x)); }, XReal(0), pi() / 4, Singularity::None},
               ClosedForm{{B::G, r(1, 2)}}, "Eq. (coscat1): -pi/4 ln2 + G/2"});
  v.push_back({"Q12", {"Q12", [](const Point &p) { XReal l = ln(cos(p.x)); return l * l; }, XReal(0), pi() / 4, Singularity::None},
               ClosedForm{{B::G_LN2, r(-1, 2)}, {B::PI_LN2SQ, r(5, 16)}, {B::PI3, r(7, 192)}, {B::IM_LI3, r(-1)}},
               "Eq. (cossq11s) with (Harm2k3): -G ln2 + pi/4 ln^2 2 + pi^3/192 + sum (-1)^(k-1) H_2k/(2k+1)^2"});
  add("Q13a", [](const Point &p) { XReal l = ln1m(p); return l * l / p.x; }, Singularity::LogAtB, {{B::ZETA3, r(2)}},
      "Section 3.1: int ln^2(1-x)/x = 2 zeta(3)");
  add("Q13b", [](const Point &p) { XReal l = ln1m(p) + log1p(p.x); return l * l / p.x; }, Singularity::LogAtB,
      {{B::ZETA3, r(1)}}, "Section 3.1: int ln^2(1-x^2)/x = zeta(3)");
  add("Q13c", [](const Point &p) { XReal l = log1p(p.x); return l * l / p.x; }, Singularity::None, {{B::ZETA3, r(1, 4)}},
      "Section 3.1 proof: int ln^2(1+x)/x = zeta(3)/4");
  add("Q14", [](const Point &p) { return 2 * p.x * atan(p.x) * log1p(p.x * p.x) / (1 + p.x * p.x); }, Singularity::None,
      {{B::G_LN2, r(1)}, {B::PI3, r(-7, 96)}, {B::PI_LN2SQ, r(-1, 2)}, {B::IM_LI3, r(2)}},
      "Eq. (vallast1): G ln2 - 7pi^3/96 - pi/2 ln^2 2 + 2 Im Li3(1+i)");
  add("Q15", [](const Point &p) { return atanx_over_x(p.x) * (ln1m(p) + log1p(p.x)); }, Singularity::LogAtB,
      {{B::IM_LI3, r(-4)}, {B::G_LN2, r(2)}, {B::PI3, r(3, 32)}, {B::PI_LN2SQ, r(1, 4)}},
      "Eq. (haf1): -4 Im Li3(1+i) + 2G ln2 + 3pi^3/32 + pi/4 ln^2 2");
  add("C1", [](const Point &p) { return atanx_over_x(p.x) * (16 * log1p(p.x * p.x) - 32 * ln1m(p)); }, Singularity::LogAtB,
      {{B::PI3, r(1)}}, "Conclusion: pi = (int arctan x/x (2^4 ln(1+x^2) - 2^5 ln(1-x)))^(1/3)");
  add("C2", [](const Point &p) { return 32 * atanx_over_x(p.x) * (log1p(p.x) / 3 - ln1m(p)); }, Singularity::LogAtB,
      {{B::PI3, r(1)}}, "Conclusion: pi = (int 2^5 arctan x/x (ln(1+x)/3 - ln(1-x)))^(1/3)");
  return v;
}

std::vector<CombinationEntry> build_combinations() {
  auto c = [](long a, long b = 1) { return Rational(a, b); };
  return {
      {"V1", {{c(2), "Q2"}, {c(1), "Q1"}, {c(4), "Q4"}}, {{B::G_LN2, r(4)}, {B::PI3, r(-1, 16)}},
       "Eq. (Valeanint): 4G ln2 - pi^3/16"},
      {"V2", {{c(1), "Q1"}, {c(-1), "Q14"}, {c(2), "Q4"}}, {{B::PI_LN2SQ, r(3, 8)}, {B::PI3, r(-1, 48)}},
       "Section 3.4: 3pi/8 ln^2 2 - pi^3/48"},
      {"V3", {{c(1), "Q3"}, {c(1), "Q2"}, {c(2), "Q4"}}, {{B::G_LN2, r(2)}, {B::PI3, r(-1, 16)}},
       "Section 3.4: 2 ln2 G - pi^3/16"},
      {"V4", {{c(1), "Q1"}, {c(1), "Q14"}}, {{B::G_LN2, r(2)}, {B::PI_LN2SQ, r(-3, 8)}, {B::PI3, r(-1, 96)}},
       "Eq. (valeanfour): 2G ln2 - 3pi/8 ln^2 2 - pi^3/96"},
      {"N1", {{c(32, 3), "Q2"}, {c(-32), "Q3"}}, {{B::PI3, r(1)}}, "Eq. (newinegabd1): integral representation of pi^3"},
      {"N2", {{c(3), "Q1"}, {c(-2), "Q2"}}, {}, "Eq. (newinega12): = 0"},
      {"N3", {{c(16), "Q1"}, {c(-32), "Q3"}}, {{B::PI3, r(1)}}, "Eq. (newman2): = pi^3"},
      {"N4", {{c(6), "Q4"}, {c(4), "Q2"}}, {{B::PI3, r(-3, 32)}, {B::G_LN2, r(6)}}, "Eq. (newinega123): -3pi^3/32 + 6G ln2"},
      {"N5", {{c(1), "Q4"}, {c(1), "Q1"}}, {{B::PI3, r(-1, 64)}, {B::G_LN2, r(1)}}, "Eq. (newman1): -pi^3/64 + G ln2"},
      {"N6", {{c(1), "Q4"}, {c(2), "Q3"}}, {{B::PI3, r(-5, 64)}, {B::G_LN2, r(1)}}, "Eq. (newman3): -5pi^3/64 + G ln2"},
      {"N7", {{c(3), "Q5"}, {c(-2), "Q2"}}, {{B::G_LN2, r(-6)}, {B::PI3, r(3, 32)}}, "Eq. (newinega12345): -6G ln2 + 3pi^3/32"},
      {"N8", {{c(1), "Q5"}, {c(-1), "Q1"}}, {{B::G_LN2, r(-2)}, {B::PI3, r(1, 32)}}, "Eq. (newmanm1): -2G ln2 + pi^3/32"},
      {"N9", {{c(1), "Q5"}, {c(-2), "Q3"}}, {{B::G_LN2, r(-2)}, {B::PI3, r(3, 32)}}, "Eq. (tenthint): -2G ln2 + 3pi^3/32"},
      {"N10", {{c(1), "Q2"}, {c(3, 2), "Q14"}}, {{B::G_LN2, r(3)}, {B::PI3, r(-1, 64)}, {B::PI_LN2SQ, r(-9, 16)}},
       "Eq. (sixthint): 3G ln2 - pi^3/64 - 9pi/16 ln^2 2"},
      {"N11", {{c(1), "Q3"}, {c(1, 2), "Q14"}}, {{B::G_LN2, r(1)}, {B::PI3, r(-7, 192)}, {B::PI_LN2SQ, r(-3, 16)}},
       "Eq. (t3nth): G ln2 - 7pi^3/192 - 3pi/16 ln^2 2"},
      {"N12", {{c(1), "Q5"}, {c(1), "Q4"}}, {{B::G_LN2, r(-1)}, {B::PI3, r(1, 64)}}, "Eq. (t4nth): -G ln2 + pi^3/64"},
      {"N13", {{c(1), "Q14"}, {c(-1), "Q4"}}, {{B::G_LN2, r(1)}, {B::PI3, r(1, 192)}, {B::PI_LN2SQ, r(-3, 8)}},
       "Eq. (t5nth): G ln2 + pi^3/192 - 3pi/8 ln^2 2"},
  };
}

}  // namespace

const std::vector<IntegralEntry> &integral_registry() {
  static const std::vector<IntegralEntry> v = build_integrals();
  return v;
}

const std::vector<CombinationEntry> &combination_registry() {
  static const std::vector<CombinationEntry> v = build_combinations();
  return v;
}

const IntegralEntry &integrand_registry(const std::string &id) {
  for (const auto &e : integral_registry())
    if (e.id == id) return e;
  throw Error(ErrorKind::UnknownId, "unknown integral id '" + id + "'");
}

const CombinationEntry &combination(const std::string &id) {
  for (const auto &e : combination_registry())
    if (e.id == id) return e;
  throw Error(ErrorKind::UnknownId, "unknown combination id '" + id + "'");
}

}  // namespace psilab
