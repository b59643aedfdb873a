/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "psilab/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>

#include "psilab/quadrature.hpp"
#include "psilab/specfun.hpp"

namespace psilab {

const char *method_name(SumMethod m) {
  switch (m) {
    case SumMethod::Direct: return "direct";
    case SumMethod::EmTail: return "em_tail";
    case SumMethod::Accelerated: return "accelerated";
  }
  return "?";
}

namespace {

// Pulls terms in order and remembers them.
class TermCache {
 public:
  explicit TermCache(const SeriesSpec &s) : spec_(s) {}
  const XReal &at(long j) {  // j-th term counted from start_index
    while (static_cast<long>(v_.size()) <= j) v_.push_back(spec_.term(spec_.start_index + static_cast<long>(v_.size())));
    return v_[j];
  }
  long size() const { return static_cast<long>(v_.size()); }

 private:
  const SeriesSpec &spec_;
  std::vector<XReal> v_;
};

struct Crvz {
  XReal value, roundoff;
};

// Cohen, Rodriguez Villegas and Zagier, algorithm 1: sum_{j<n} (-1)^j a_j accelerated.
Crvz crvz(TermCache &a, long n) {
  XReal e = pow_int(3 + sqrt(XReal(8)), n);
  XReal d = (e + XReal(1) / e) / 2;
  XReal b(-1), c = -d, s(0), mag(0);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    XReal t = c * a.at(k);
    s += t;
    mag += abs(t);
    b = b * XReal(k + n) * XReal(k - n) / ((XReal(k) + XReal(0.5)) * XReal(k + 1));
  }
  return {s / d, mag / d * machine_eps() * 16};
}

void check_spec(const SeriesSpec &spec, SignPattern want) {
  if (!spec.term) throw Error(ErrorKind::Config, "series '" + spec.id + "' has no term function");
  if (spec.sign_pattern != want) throw Error(ErrorKind::Config, "series '" + spec.id + "' has the wrong sign pattern for this engine");
}

}  // namespace

SumResult sum_alternating(const SeriesSpec &spec, const XReal &eps, const SeriesBudget &budget) {
  check_spec(spec, SignPattern::StrictlyAlternating);
  TermCache a(spec);
  // about 0.77 digits per term
  double digits = -std::log10(std::max(eps.to_double(), 1e-40));
  long n = std::max<long>(12, static_cast<long>(std::ceil(digits / 0.76)) + 6);
  XReal sign = (spec.start_index % 2 == 0) ? XReal(1) : XReal(-1);
  XReal best(0);
  for (;;) {
    long n2 = n + 10;
    if (n2 + 1 > budget.accelerated_terms)
      throw NonConvergence("alternating series '" + spec.id + "' exceeded the term budget", (sign * best).value());
    for (long j = n2 / 2; j < n2; ++j) {
      XReal next = a.at(j + 1);
      if (next > a.at(j))
        throw NonConvergence("alternating series '" + spec.id + "': magnitudes increase at k = " +
                                 std::to_string(spec.start_index + j + 1),
                             (sign * best).value());
    }
    Crvz r1 = crvz(a, n), r2 = crvz(a, n2);
    best = r2.value;
    XReal diff = abs(r1.value - r2.value);
    XReal floor = r2.roundoff;
    if (diff <= eps || diff <= floor) {
      SumResult res;
      res.value = sign * r2.value;
      res.terms_used = n2 + 1;
      res.tail_estimate = diff > floor ? diff : floor;
      res.method = SumMethod::Accelerated;
      // classical partial sums at the cutoff must straddle the accelerated value
      XReal p(0);
      for (long j = 0; j < n2; ++j) p += (j % 2 == 0) ? a.at(j) : -a.at(j);
      XReal q = p + ((n2 % 2 == 0) ? a.at(n2) : -a.at(n2));
      XReal lo = p < q ? p : q, hi = p < q ? q : p;
      XReal slack = res.tail_estimate + abs(r2.value) * machine_eps() * 64;
      res.bracketed = r2.value >= lo - slack && r2.value <= hi + slack;
      if (!res.bracketed)
        throw NonConvergence("alternating series '" + spec.id + "': accelerated value not bracketed by partial sums",
                             res.value.value());
      return res;
    }
    n *= 2;
  }
}

namespace {

constexpr int kStencil = 8;  // points N-8 .. N+8
constexpr int kEmTerms = 5;  // B_2 .. B_10

// Fornberg weights for derivatives 1..9 at 0 on the integer grid -8..8, exact.
const std::array<std::array<XReal, 2 * kStencil + 1>, 2 * kEmTerms> &fd_weights() {
  static const auto table = [] {
    constexpr int M = 2 * kEmTerms - 1, P = 2 * kStencil + 1;
    std::vector<long> x(P);
    for (int i = 0; i < P; ++i) x[i] = (i % 2 == 0) ? i / 2 : -(i + 1) / 2;  // 0,-1,1,-2,2,...
    // c[m][j] after processing node i
    std::vector<std::vector<std::vector<Rational>>> c(M + 1, std::vector<std::vector<Rational>>(P, std::vector<Rational>(P)));
    c[0][0][0] = Rational(1);
    Rational c1(1);
    for (int i = 1; i < P; ++i) {
      Rational c2(1);
      for (int j = 0; j < i; ++j) {
        Rational c3(x[i] - x[j]);
        c2 *= c3;
        for (int m = 0; m <= std::min(i, M); ++m) {
          Rational prev = (m > 0) ? c[m - 1][i - 1][j] : Rational(0);
          c[m][i][j] = (Rational(x[i]) * c[m][i - 1][j] - Rational(m) * prev) / c3;
        }
      }
      for (int m = 0; m <= std::min(i, M); ++m) {
        Rational prev = (m > 0) ? c[m - 1][i - 1][i - 1] : Rational(0);
        c[m][i][i] = c1 / c2 * (Rational(m) * prev - Rational(x[i - 1]) * c[m][i - 1][i - 1]);
      }
      c1 = c2;
    }
    std::array<std::array<XReal, 2 * kStencil + 1>, 2 * kEmTerms> out{};
    for (int m = 1; m <= M; ++m)
      for (int j = 0; j < P; ++j) out[m][x[j] + kStencil] = c[m][P - 1][j].to_xreal();
    return out;
  }();
  return table;
}

}  // namespace

SumResult sum_em_tail(const SeriesSpec &spec, const XReal &eps, const SeriesBudget &budget) {
  check_spec(spec, SignPattern::AllPositive);
  if (!spec.real_term) throw Error(ErrorKind::Config, "series '" + spec.id + "' lacks a real-argument term for the tail integral");
  if (spec.decay < 2) throw Error(ErrorKind::Config, "Euler-Maclaurin tail needs decay exponent >= 2");
  const auto &w = fd_weights();
  std::vector<XReal> g;  // g[i] = term(start + i)
  XReal partial(0);
  long summed = 0;  // terms folded into partial
  long N = std::max<long>(budget.em_cutoff, spec.start_index + 2 * kStencil);
  XReal last_value(0);
  for (;;) {
    long need = N + kStencil - spec.start_index + 1;
    if (need > budget.direct_terms)
      throw NonConvergence("series '" + spec.id + "' exceeded the direct term budget", last_value.value());
    while (static_cast<long>(g.size()) < need) {
      XReal t = spec.term(spec.start_index + static_cast<long>(g.size()));
      if (t < XReal(0)) throw Error(ErrorKind::Domain, "series '" + spec.id + "' produced a negative term");
      g.push_back(t);
    }
    long iN = N - spec.start_index;
    for (; summed < iN; ++summed) partial += g[summed];
    // sum_{k>=N} g(k) = int_N^inf g + g(N)/2 - sum_j B_2j/(2j)! g^(2j-1)(N)
    XReal fN = XReal(N);
    IntegralSpec tail{spec.id + ":tail",
                      [&](const Point &p) {
                        XReal u = p.x < XReal(0.5) ? p.xa : XReal(1) - p.bx;
                        return spec.real_term(fN / u) * fN / (u * u);
                      },
                      XReal(0), XReal(1), Singularity::LogAtA};
    XReal qeps = eps / 16;
    if (qeps < XReal::raw(1e-34Q)) qeps = XReal::raw(1e-34Q);
    QuadResult q = integrate(tail, qeps);
    XReal corr = g[iN] / 2, last(0);
    XReal fact(1);  // (2j)!
    for (int j = 1; j <= kEmTerms; ++j) {
      fact *= XReal(2 * j - 1) * XReal(2 * j);
      XReal deriv(0);
      for (int i = -kStencil; i <= kStencil; ++i) deriv += w[2 * j - 1][i + kStencil] * g[iN + i];
      last = bernoulli(2 * j).to_xreal() / fact * deriv;
      corr -= last;
    }
    XReal value = partial + q.value + corr;
    last_value = value;
    XReal est = abs(last) + q.error_estimate + abs(value) * XReal::raw(1e-32Q);
    if (est <= eps) {
      SumResult res;
      res.value = value;
      res.terms_used = need;
      res.tail_estimate = est;
      res.method = SumMethod::EmTail;
      return res;
    }
    N *= 4;
  }
}

SumResult sum_direct(const SeriesSpec &spec, long count) {
  if (!spec.term) throw Error(ErrorKind::Config, "series '" + spec.id + "' has no term function");
  XReal s(0);
  for (long j = 0; j < count; ++j) {
    long k = spec.start_index + j;
    XReal t = spec.term(k);
    if (spec.sign_pattern == SignPattern::StrictlyAlternating && k % 2 != 0) t = -t;
    s += t;
  }
  SumResult r;
  r.value = s;
  r.terms_used = count;
  r.method = SumMethod::Direct;
  return r;
}

namespace {

// f(K,0) from the exact finite form, advanced with a running rational accumulator.
class FiniteKernel {
 public:
  XReal operator()(long K) {
    if (K < next_) {
      next_ = 0;
      alt_ = Rational(0);
    }
    for (; next_ <= K; ++next_) {
      Rational t(1, 2 * next_ + 1);
      if (next_ % 2 == 0) alt_ += t; else alt_ -= t;
    }
    // f = (-1)^(K-1) pi + 4 (-1)^K sum_{j<=K} (-1)^j/(2j+1)
    Rational rat = (K % 2 == 0) ? Rational(4) * alt_ : Rational(-4) * alt_;
    XReal p = (K % 2 == 0) ? -pi() : pi();
    return rat.to_xreal() + p;
  }

 private:
  long next_ = 0;
  Rational alt_;
};

SeriesSpec theta_spec(long n, long alpha, KernelSource src, SignPattern sp, const std::string &name) {
  if (n < 0 || alpha < 0) throw Error(ErrorKind::Domain, name + " needs n >= 0 and alpha >= 0");
  SeriesSpec s;
  s.id = name + "(" + std::to_string(n) + "," + std::to_string(alpha) + ")";
  s.sign_pattern = sp;
  s.tail_class = sp == SignPattern::AllPositive ? TailClass::SmoothRationalDecay : TailClass::AlternatingDecreasing;
  s.decay = 3;
  s.start_index = 1;
  if (src == KernelSource::Psi) {
    s.term = [n, alpha](long k) {
      XReal d(2 * k + alpha);
      return f_psi(k, n) / (d * d);
    };
  } else {
    auto fk = std::make_shared<FiniteKernel>();
    s.term = [n, alpha, fk](long k) {
      XReal d(2 * k + alpha);
      return (*fk)(k + n) / (d * d);
    };
  }
  s.real_term = [n, alpha](const XReal &x) {
    XReal d = 2 * x + XReal(alpha);
    return f_kernel(x + XReal(n)) / (d * d);
  };
  return s;
}

}  // namespace

SeriesSpec theta1_spec(long n, long alpha, KernelSource src) {
  return theta_spec(n, alpha, src, SignPattern::AllPositive, "theta1");
}
SeriesSpec theta2_spec(long n, long alpha, KernelSource src) {
  return theta_spec(n, alpha, src, SignPattern::StrictlyAlternating, "theta2");
}

SumResult theta1(long n, long alpha, const XReal &eps, const SeriesBudget &budget, KernelSource src) {
  return sum_em_tail(theta1_spec(n, alpha, src), eps, budget);
}
SumResult theta2(long n, long alpha, const XReal &eps, const SeriesBudget &budget, KernelSource src) {
  return sum_alternating(theta2_spec(n, alpha, src), eps, budget);
}

SumResult theta_weighted(long n, long m, Weight w, const XReal &eps, const SeriesBudget &budget) {
  if (m < 0 || (w == Weight::HalfPlus && m < 1)) throw Error(ErrorKind::Domain, "weighted theta: m out of range");
  long alpha = w == Weight::HalfMinus ? 4 * m : 4 * m - 2;
  SumResult a = theta1(n, alpha, eps / 2, budget), b = theta2(n, alpha, eps / 2, budget);
  SumResult r;
  r.value = a.value / 2 + (w == Weight::HalfMinus ? -b.value : b.value);
  r.terms_used = a.terms_used + b.terms_used;
  r.tail_estimate = a.tail_estimate / 2 + b.tail_estimate;
  r.method = SumMethod::Accelerated;
  r.bracketed = b.bracketed;
  return r;
}

XReal away_term(long k, long n) {
  // plain digamma difference, deliberately not the kernel used by the split engines
  XReal k2 = XReal(k) * XReal(k);
  return (digamma(XReal(k + 2 * n + 5) / 4) - digamma(XReal(k + 2 * n + 3) / 4)) / k2;
}

AwayParts away_series_parts(long n, const XReal &eps, const SeriesBudget &budget) {
  if (n < 0) throw Error(ErrorKind::Domain, "away series needs n >= 0");
  AwayParts p;
  // even k = 2j: f(j,n)/(2j)^2, which is Theta1(n,0) term for term
  p.even = theta1(n, 0, eps / 2, budget);
  // odd k = 2j+1, j >= 0
  SeriesSpec odd;
  odd.id = "away_odd(" + std::to_string(n) + ")";
  odd.start_index = 0;
  odd.decay = 3;
  odd.term = [n](long j) {
    XReal d(2 * j + 1);
    return f_kernel(XReal(j + n) + XReal(0.5)) / (d * d);
  };
  odd.real_term = [n](const XReal &x) {
    XReal d = 2 * x + 1;
    return f_kernel(x + XReal(n) + XReal(0.5)) / (d * d);
  };
  p.odd = sum_em_tail(odd, eps / 2, budget);
  p.total.value = p.even.value + p.odd.value;
  p.total.terms_used = p.even.terms_used + p.odd.terms_used;
  p.total.tail_estimate = p.even.tail_estimate + p.odd.tail_estimate;
  p.total.method = SumMethod::EmTail;
  return p;
}

SumResult away_series(long n, const XReal &eps, const SeriesBudget &budget) {
  return away_series_parts(n, eps, budget).total;
}

namespace {

// Running H_k for consecutive k.
class Harmonic {
 public:
  XReal operator()(long k) {
    if (k < k_) {
      k_ = 0;
      h_ = XReal(0);
    }
    for (; k_ < k;) {
      ++k_;
      h_ += XReal(1) / XReal(k_);
    }
    return h_;
  }

 private:
  long k_ = 0;
  XReal h_;
};

SeriesSpec alt_harmonic(const std::string &id, long start, std::function<XReal(Harmonic &, long)> num) {
  SeriesSpec s;
  s.id = id;
  s.sign_pattern = SignPattern::StrictlyAlternating;
  s.tail_class = TailClass::AlternatingDecreasing;
  s.start_index = start;
  auto h = std::make_shared<Harmonic>();
  s.term = [h, num](long k) {
    XReal d(2 * k + 1);
    return num(*h, k) / (d * d);
  };
  return s;
}

// Power series in z with |z| < 1: direct summation until the geometric tail bound is below eps.
SumResult geometric_sum(const std::string &id, const XReal &z, const XReal &eps, const SeriesBudget &budget,
                        const std::function<XReal(long)> &coef) {
  XReal az = abs(z);
  if (!(az < XReal(1))) throw Error(ErrorKind::Domain, id + " needs |z| < 1");
  XReal s(0), zp = z;  // z^(k+1)
  for (long k = 1; k <= budget.direct_terms; ++k) {
    zp *= z;
    XReal c = coef(k);
    XReal t = c * zp;
    s += t;
    // coefficients here grow at most like ln k, so 2|t|/(1-|z|) bounds the rest once |z| is fixed
    XReal bound = 2 * abs(t) * az / (XReal(1) - az);
    if (k > 8 && bound <= eps / 4) {
      SumResult r;
      r.value = s;
      r.terms_used = k;
      r.tail_estimate = bound;
      r.method = SumMethod::Direct;
      return r;
    }
  }
  throw NonConvergence(id + " exceeded the direct term budget", s.value());
}

SumResult combine(const SumResult &a, const XReal &ca, const SumResult &b, const XReal &cb) {
  SumResult r;
  r.value = ca * a.value + cb * b.value;
  r.terms_used = a.terms_used + b.terms_used;
  r.tail_estimate = abs(ca) * a.tail_estimate + abs(cb) * b.tail_estimate;
  r.method = a.method == SumMethod::Accelerated || b.method == SumMethod::Accelerated ? SumMethod::Accelerated : a.method;
  r.bracketed = a.bracketed && b.bracketed;
  return r;
}

}  // namespace

const std::vector<std::string> &aux_series_ids() {
  static const std::vector<std::string> ids = {"S-psi1",  "S-H2k",       "S-Hk",      "S-h2khk",
                                               "S-jk",    "S-usres",     "S-neweq1",  "S-proofn1ab",
                                               "S-concl", "S-genr0508",  "S-lem6",    "S-lem7"};
  return ids;
}

SumResult aux_series(const std::string &id, const XReal &eps, const SeriesBudget &budget, const XReal &z) {
  if (id == "S-psi1") {
    SeriesSpec s;
    s.id = id;
    s.decay = 2;
    s.term = [](long k) { return polygamma(1, XReal(k + 1)) / XReal(k + 1); };
    s.real_term = [](const XReal &x) { return polygamma(1, x + 1) / (x + 1); };
    return sum_em_tail(s, eps, budget);
  }
  if (id == "S-H2k")
    return sum_alternating(alt_harmonic(id, 1, [](Harmonic &h, long k) { return h(2 * k); }), eps, budget);
  if (id == "S-Hk")
    return sum_alternating(alt_harmonic(id, 1, [](Harmonic &h, long k) { return h(k); }), eps, budget);
  if (id == "S-h2khk") {
    // H_k and H_2k from one running accumulator
    auto hk = std::make_shared<std::vector<XReal>>(1, XReal(0));
    return sum_alternating(alt_harmonic(id, 1, [hk](Harmonic &h, long k) {
                             XReal h2 = h(2 * k);
                             // H_k was passed on the way to H_2k
                             while (static_cast<long>(hk->size()) <= k) hk->push_back(hk->back() + XReal(1) / XReal(static_cast<long>(hk->size())));
                             return (*hk)[k] + 2 * h2;
                           }),
                           eps, budget);
  }
  if (id == "S-neweq1" || id == "S-proofn1ab") {
    bool odd = id == "S-proofn1ab";
    auto hk = std::make_shared<Harmonic>();
    return sum_alternating(alt_harmonic(id, 1, [hk, odd](Harmonic &h, long k) {
                             return h(odd ? 2 * k + 1 : 2 * k) - (*hk)(k);
                           }),
                           eps, budget);
  }
  if (id == "S-concl")
    return sum_alternating(alt_harmonic(id, 0, [](Harmonic &h, long k) { return h(2 * k + 1); }), eps, budget);
  if (id == "S-jk") {
    // sum (-1)^k s_k/(2k+1)^2, s_k = sum_{j<=k} (-1)^(j-1)/(2j+1). With L = 1 - pi/4,
    // (-1)^k s_k = (-1)^k L - r_k and r_k = f(k,0)/4 > 0.
    SeriesSpec a;
    a.id = id + ":alt";
    a.sign_pattern = SignPattern::StrictlyAlternating;
    a.tail_class = TailClass::AlternatingDecreasing;
    a.term = [](long k) {
      XReal d(2 * k + 1);
      return XReal(1) / (d * d);
    };
    SeriesSpec r;
    r.id = id + ":rest";
    r.decay = 3;
    // r_k from the exact inner finite sum: r_k = (-1)^k (L - s_k)
    auto s_k = std::make_shared<std::pair<long, Rational>>(0, Rational(0));
    r.term = [s_k](long k) {
      for (; s_k->first < k;) {
        ++s_k->first;
        Rational t(1, 2 * s_k->first + 1);
        if (s_k->first % 2 == 1) s_k->second += t; else s_k->second -= t;
      }
      XReal rk = (XReal(1) - pi() / 4) - s_k->second.to_xreal();
      if (k % 2 != 0) rk = -rk;
      XReal d(2 * k + 1);
      return rk / (d * d);
    };
    r.real_term = [](const XReal &x) {
      XReal d = 2 * x + 1;
      return f_kernel(x) / 4 / (d * d);
    };
    SumResult A = sum_alternating(a, eps / 4, budget), R = sum_em_tail(r, eps / 2, budget);
    return combine(A, XReal(1) - pi() / 4, R, XReal(-1));
  }
  if (id == "S-usres") return theta1(0, 1, eps, budget);
  if (id == "S-genr0508") return away_series(0, eps, budget);
  if (id == "S-lem6") {
    auto h = std::make_shared<Harmonic>();
    return geometric_sum(id, z, eps, budget, [h](long k) {
      XReal d(k + 1);
      return (*h)(k) / (d * d);
    });
  }
  if (id == "S-lem7") {
    // psi_1(k+1) = zeta(2) - H_k^(2), kept as a running value
    auto st = std::make_shared<std::pair<long, XReal>>(0, zeta_int(2));
    return geometric_sum(id, z, eps, budget, [st](long k) {
      for (; st->first < k;) {
        ++st->first;
        st->second -= XReal(1) / (XReal(st->first) * XReal(st->first));
      }
      return st->second / XReal(k + 1);
    });
  }
  throw Error(ErrorKind::UnknownId, "unknown auxiliary series '" + id + "'");
}

XReal fourier_ln2cos_check(const XReal &z, long n_terms, const XReal &eps) {
  XReal hp = pi() / 2;
  if (!(abs(z) < hp)) throw Error(ErrorKind::Domain, "fourier check needs |z| < pi/2");
  if (n_terms < 1) throw Error(ErrorKind::Config, "fourier check needs n_terms >= 1");
  // sum_{k>=1} H_k w^(k+1)/(k+1) with w = -exp(2iz); the cosine series is twice its real part
  XComplex w = -exp(XComplex(XReal(0), 2 * z));
  XComplex one(XReal(1));
  XReal ratio = abs(w / (one - w));
  if (!(ratio < XReal(1)))
    throw Error(ErrorKind::Domain, "Euler transform ratio >= 1; |z| must stay below pi/3");
  Harmonic h;
  XComplex s, wp = w;  // w^(k+1)
  for (long k = 1; k <= n_terms; ++k) {
    wp *= w;
    s += wp * XComplex(h(k) / XReal(k + 1));
  }
  // tail w^(N+2) sum_i a_{N+1+i} w^i, a_k = H_k/(k+1), by the Euler transform
  // sum_i a_i w^i = sum_j w^j/(1-w)^(j+1) Delta^j a_0
  const long J = 400;
  std::vector<XReal> a;
  for (long i = 0; i <= J; ++i) {
    long k = n_terms + 1 + i;
    a.push_back(h(k) / XReal(k + 1));
  }
  XComplex q = w / (one - w), qp = one / (one - w), tail;
  bool done = false;
  std::vector<XReal> diff = a;
  for (long j = 0; j < J; ++j) {
    XComplex t = qp * XComplex(diff[0]);
    tail += t;
    if (j > 4 && abs(t) < eps / 100) {
      done = true;
      break;
    }
    qp *= q;
    for (size_t i = 0; i + 1 < diff.size() - j; ++i) diff[i] = diff[i + 1] - diff[i];
  }
  if (!done) throw NonConvergence("fourier ln^2(2cos z) tail did not converge", 0);
  s += wp * w * tail;
  XReal l = ln(2 * cos(z));
  return abs(l * l - z * z - 2 * s.re);
}

std::vector<XReal> f_recurrence(long k0, long count) {
  std::vector<XReal> out;
  if (count <= 0) return out;
  out.reserve(count);
  FFinite seed = f_finite(k0, 0);
  XReal f = seed.to_xreal();
  for (long i = 0; i < count; ++i) {
    out.push_back(f);
    long K = k0 + i;
    // psi(y+1) - psi(y) = 1/y with y = (2K+3)/4
    f = XReal(4) / XReal(2 * K + 3) - f;
  }
  return out;
}

}  // namespace psilab
