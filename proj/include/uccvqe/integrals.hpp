// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "uccvqe/basis.hpp"
#include "uccvqe/four_index.hpp"
#include "uccvqe/geometry.hpp"

namespace uccvqe {

/// Atomic-orbital integrals in Hartree atomic units.
struct AOIntegrals {
  Eigen::MatrixXd overlap;
  Eigen::MatrixXd kinetic;
  Eigen::MatrixXd nuclear;   // nuclear attraction (negative definite-ish)
  FourIndexTensor eri;       // chemists' (pq|rs)
  double e_nuc = 0.0;
};

/// Boys function F0: closed erf form, series below x = 1e-6.
double boys_f0(double x);

/// Closed-form integrals for contracted s-Gaussians. Throws
/// LinearDependenceError when cond(overlap) > 1e12.
AOIntegrals compute_s_integrals(const Geometry& geometry, const BasisSet& basis);

}  // namespace uccvqe
