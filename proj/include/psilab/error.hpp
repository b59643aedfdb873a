/*
 * (C) Copyright 2026 The psilab Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace psilab {

enum class ErrorKind {
  Domain = 1,
  DivisionByZero,
  BranchCut,
  NonConvergence,
  UnknownId,
  Config,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the summation and quadrature engines; keeps the best value seen.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string &what, __float128 best)
      : Error(ErrorKind::NonConvergence, what), best_(best) {}
  __float128 best() const noexcept { return best_; }

 private:
  __float128 best_;
};

}  // namespace psilab
