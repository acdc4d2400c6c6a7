// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "uccvqe/geometry.hpp"

namespace uccvqe {

/// Contracted s-shell: primitives (exponent in 1/Bohr^2, coefficient).
struct ContractedShell {
  std::vector<double> exponents;
  std::vector<double> coefficients;

  /// Rescales coefficients to unit self-overlap.
  void normalize();
  double self_overlap() const;
};

/// Per-atom s-shell lists, aligned with a Geometry's atom order.
struct BasisSet {
  std::vector<std::vector<ContractedShell>> atom_shells;

  int n_functions() const;
  void validate() const;  // exponents > 0, normalization within 1e-10
};

/// Built-in catalog ("sto-3g", "6-31g"); hydrogen only. Other elements
/// raise UnsupportedBasisError: heavier systems enter via FCIDUMP files.
BasisSet build_basis(const std::string& name, const Geometry& geometry);

}  // namespace uccvqe
