// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "uccvqe/mo_integrals.hpp"
#include "uccvqe/pauli.hpp"
#include "uccvqe/statevector.hpp"

namespace uccvqe {

/// Determinant: alpha/beta occupation masks over spatial orbitals.
struct Determinant {
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  friend bool operator==(const Determinant&, const Determinant&) = default;
};

/// Complete, duplicate-free determinant list for fixed electron count
/// and Sz, with index maps both ways. Qubit index interleaving follows
/// the alternating alpha/beta convention.
class SectorBasis {
 public:
  SectorBasis(int n_spatial, int n_alpha, int n_beta);

  int n_spatial() const { return n_spatial_; }
  int n_alpha() const { return n_alpha_; }
  int n_beta() const { return n_beta_; }
  std::size_t size() const { return dets_.size(); }
  const Determinant& det(std::size_t i) const { return dets_[i]; }
  /// -1 when the determinant lies outside the sector.
  long index_of(const Determinant& d) const;

  /// Basis index in the 2^(2 n_spatial) qubit register.
  std::uint32_t qubit_index(std::size_t i) const;

 private:
  int n_spatial_, n_alpha_, n_beta_;
  std::vector<Determinant> dets_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

struct FCISolution {
  Eigen::VectorXd eigenvalues;   // ascending, Hartree
  Eigen::MatrixXd eigenvectors;  // columns, SectorBasis order
  Eigen::VectorXd s2;            // per-root <S^2>
  int n_spatial = 0;
  int n_alpha = 0;
  int n_beta = 0;
};

/// Slater-Condon sector Hamiltonian, dense-diagonalized. ms2 = 2 Sz.
/// Exactly degenerate blocks are rotated to S^2 eigenstates so per-root
/// <S^2> is well defined; energies are unaffected.
FCISolution fci_solve(const MOIntegrals& mo, int n_electrons, int ms2, int n_roots);

/// All sector eigenvalues via the independent determinant-space route.
Eigen::VectorXd fci_spectrum(const MOIntegrals& mo, int n_electrons, int ms2);

/// Cross-validation path: project the encoded Hamiltonian onto the
/// (N, Sz) sector of the qubit register and diagonalize densely.
Eigen::VectorXd qubit_space_diagonalize(const QubitOperator& h, int n_electrons, int ms2);

/// FCI vector -> statevector (determinants mapped with the ascending
/// creation-order sign convention, which renders all signs +1).
Statevector to_statevector(const SectorBasis& basis, const Eigen::VectorXd& coefficients);

}  // namespace uccvqe
