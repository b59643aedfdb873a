/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "psilab/xprec.hpp"

namespace psilab {

enum class SignPattern { AllPositive, StrictlyAlternating, General };
enum class TailClass { SmoothRationalDecay, AlternatingDecreasing, Other };
enum class SumMethod { Direct, EmTail, Accelerated };
const char *method_name(SumMethod m);

// Engines call `term` with consecutive k = start_index, start_index+1, ... and each k
// at most once, so a term may keep a running accumulator (harmonic numbers etc).
struct SeriesSpec {
  std::string id;
  std::function<XReal(long)> term;  // magnitude for StrictlyAlternating
  SignPattern sign_pattern = SignPattern::AllPositive;
  TailClass tail_class = TailClass::SmoothRationalDecay;
  int decay = 2;  // p in term ~ k^-p
  long start_index = 1;
  // Smooth continuation of term to real k, needed by the Euler-Maclaurin tail integral.
  std::function<XReal(const XReal &)> real_term;
};

struct SumResult {
  XReal value;
  long terms_used = 0;
  XReal tail_estimate;  // magnitude
  SumMethod method = SumMethod::Direct;
  bool bracketed = true;  // alternating runs: value inside [S_M, S_M+1]
};

struct SeriesBudget {
  long accelerated_terms = 100000;
  long direct_terms = 10000000;
  long em_cutoff = 1000;  // first N tried by the Euler-Maclaurin engine
};

// sum_{k>=s} (-1)^k term(k); sign taken on the absolute index k.
SumResult sum_alternating(const SeriesSpec &spec, const XReal &eps, const SeriesBudget &budget = {});
// Positive smooth terms: direct part plus Euler-Maclaurin tail with 5 correction terms.
SumResult sum_em_tail(const SeriesSpec &spec, const XReal &eps, const SeriesBudget &budget = {});
// Plain partial sum of `count` terms (signs applied for StrictlyAlternating).
SumResult sum_direct(const SeriesSpec &spec, long count);

enum class KernelSource { Psi, Finite };

// Theta1(n, a) = sum_{k>=1} f(k,n)/(2k+a)^2, Theta2 the same with (-1)^k.
SeriesSpec theta1_spec(long n, long alpha, KernelSource src = KernelSource::Psi);
SeriesSpec theta2_spec(long n, long alpha, KernelSource src = KernelSource::Psi);
SumResult theta1(long n, long alpha, const XReal &eps, const SeriesBudget &budget = {},
                 KernelSource src = KernelSource::Psi);
SumResult theta2(long n, long alpha, const XReal &eps, const SeriesBudget &budget = {},
                 KernelSource src = KernelSource::Psi);

enum class Weight { HalfMinus, HalfPlus };
// HalfMinus: sum (1/2 - (-1)^k) f(k,n)/(2k+4m)^2   (m = 0 gives denominator (2k)^2)
// HalfPlus:  sum (1/2 + (-1)^k) f(k,n)/(2k+4m-2)^2 (m >= 1)
SumResult theta_weighted(long n, long m, Weight w, const XReal &eps, const SeriesBudget &budget = {});

// sum_{k>=1} [psi((k+2n+5)/4) - psi((k+2n+3)/4)] / k^2, split into even and odd k.
struct AwayParts {
  SumResult even, odd, total;
};
AwayParts away_series_parts(long n, const XReal &eps, const SeriesBudget &budget = {});
SumResult away_series(long n, const XReal &eps, const SeriesBudget &budget = {});
// The unsplit summand, for re-indexing checks.
XReal away_term(long k, long n);

// Auxiliary harmonic / polygamma sums. Generating-series ids take the sample point z.
const std::vector<std::string> &aux_series_ids();
SumResult aux_series(const std::string &id, const XReal &eps, const SeriesBudget &budget = {},
                     const XReal &z = XReal(0));

// |ln^2(2cos z) - z^2 - 2 sum (-1)^(k-1) H_k cos(2(k+1)z)/(k+1)| with the tail past
// n_terms summed by a complex Euler transform.
XReal fourier_ln2cos_check(const XReal &z, long n_terms, const XReal &eps);

// f(K,0) for K = k0 .. k0+count-1 by the two-term recurrence F(K+1) = 4/(2K+3) - F(K),
// seeded from the exact finite form. Independent of digamma; used for brute-force sums.
std::vector<XReal> f_recurrence(long k0, long count);

}  // namespace psilab
