// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "uccvqe/integrals.hpp"
#include "uccvqe/geometry.hpp"

namespace uccvqe {

struct RhfResult {
  Eigen::MatrixXd coefficients;      // AO x MO
  Eigen::VectorXd orbital_energies;
  double energy = 0.0;               // total, including nuclear repulsion
  double electronic_energy = 0.0;
  int iterations = 0;
};

/// Restricted Hartree-Fock with DIIS; density residual 1e-8, cap 200.
/// n_electrons_scf must be even (open-shell registers reuse the orbitals
/// of the nearest lower closed-shell configuration; callers pass that
/// count explicitly). Throws ScfConvergenceError when the cap is hit.
RhfResult run_rhf(const Geometry& geometry, const AOIntegrals& ao, int n_electrons_scf);

/// Uses geometry.n_electrons(); throws ValidationError when odd.
RhfResult run_rhf(const Geometry& geometry, const AOIntegrals& ao);

/// Largest even electron count not exceeding n (the SCF field used for
/// open-shell registers).
int closed_shell_electron_count(int n_electrons);

}  // namespace uccvqe
