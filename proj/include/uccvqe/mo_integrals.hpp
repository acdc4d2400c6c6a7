// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "uccvqe/four_index.hpp"
#include "uccvqe/integrals.hpp"

namespace uccvqe {

/// Molecular-orbital integrals: the single source of truth for the
/// second-quantized Hamiltonian. Energies in Hartree, chemists' (pq|rs).
struct MOIntegrals {
  int n_orb = 0;
  double e_nuc = 0.0;
  double e_core = 0.0;  // frozen-core shift, 0 if nothing is frozen
  Eigen::MatrixXd h;
  FourIndexTensor g;

  double constant() const { return e_nuc + e_core; }
  /// Throws ValidationError on asymmetric h, broken (pq|rs) symmetry,
  /// or non-finite entries.
  void validate(double tol = 1e-10) const;
};

/// AO -> MO basis change, then optional frozen-core folding.
MOIntegrals transform_to_mo(const AOIntegrals& ao, const Eigen::MatrixXd& mo_coefficients,
                            const std::vector<int>& frozen_core = {});

/// Folds doubly occupied orbitals into e_core and an effective one-body
/// term; the active space keeps the remaining orbitals in order.
MOIntegrals fold_core(const MOIntegrals& mo, const std::vector<int>& frozen_core);

struct FcidumpData {
  MOIntegrals mo;
  int n_electrons = 0;
  int ms2 = 0;
};

FcidumpData read_fcidump(const std::string& path);
void write_fcidump(const MOIntegrals& mo, int n_electrons, int ms2, const std::string& path);

}  // namespace uccvqe
