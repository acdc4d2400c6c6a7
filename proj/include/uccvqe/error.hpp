// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace uccvqe {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GeometryError : Error {
  using Error::Error;
};

struct UnsupportedBasisError : Error {
  using Error::Error;
};

struct LinearDependenceError : Error {
  using Error::Error;
};

struct ScfConvergenceError : Error {
  ScfConvergenceError(const std::string& msg, double energy, double residual)
      : Error(msg), last_energy(energy), last_residual(residual) {}
  double last_energy;
  double last_residual;
};

struct ParseError : Error {
  ParseError(const std::string& msg, int line_number)
      : Error(msg + " (line " + std::to_string(line_number) + ")"), line(line_number) {}
  int line;
};

struct ValidationError : Error {
  using Error::Error;
};

struct IncompatibleAnsatzError : Error {
  using Error::Error;
};

struct ReferenceDominationError : Error {
  using Error::Error;
};

struct OptimizationError : Error {
  using Error::Error;
};

}  // namespace uccvqe
