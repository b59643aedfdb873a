/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>

#include "doctest.h"
#include "psilab/xprec.hpp"

namespace oracle {

inline psilab::XReal X(const char *s) { return psilab::parse_xreal(s); }
inline psilab::XReal tol(int e) { return psilab::pow_int(psilab::XReal(10), -e); }

// |a - b| <= t, printing both values on failure
#define CHECK_NEAR(a, b, t)                                                                              \
  do {                                                                                                   \
    psilab::XReal a_ = (a), b_ = (b), t_ = (t);                                                          \
    INFO("lhs=" << psilab::to_string(a_, 36) << " rhs=" << psilab::to_string(b_, 36)                     \
                << " diff=" << psilab::to_string(psilab::abs(a_ - b_), 4));                             \
    CHECK(psilab::abs(a_ - b_) <= t_);                                                                   \
  } while (0)

// relative version, for values far from 1
#define CHECK_REL(a, b, t)                                                                               \
  do {                                                                                                   \
    psilab::XReal a_ = (a), b_ = (b), t_ = (t);                                                          \
    INFO("lhs=" << psilab::to_string(a_, 36) << " rhs=" << psilab::to_string(b_, 36));                   \
    CHECK(psilab::abs(a_ - b_) <= t_ * psilab::abs(b_));                                                 \
  } while (0)

#define CHECK_KIND(expr, k)                                  \
  do {                                                       \
    bool thrown_ = false;                                    \
    try {                                                    \
      (void)(expr);                                          \
    } catch (const psilab::Error &e_) {                      \
      thrown_ = true;                                        \
      CHECK(e_.kind() == (k));                               \
    }                                                        \
    CHECK_MESSAGE(thrown_, "expected a psilab::Error");      \
  } while (0)

}  // namespace oracle
