// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "uccvqe/fermion.hpp"
#include "uccvqe/mo_integrals.hpp"
#include "uccvqe/pauli.hpp"

namespace uccvqe {

/// Spin-orbital convention: spatial orbital i maps to modes 2i (alpha)
/// and 2i+1 (beta); mode index equals qubit index after encoding.
inline int alpha_of(int spatial) { return 2 * spatial; }
inline int beta_of(int spatial) { return 2 * spatial + 1; }
inline int spatial_of(int mode) { return mode / 2; }
inline bool is_beta(int mode) { return mode & 1; }

/// Jordan-Wigner encoding; an algebra homomorphism on the tested set.
QubitOperator jordan_wigner(const FermionOperator& op, int n_qubits);

/// Electronic Hamiltonian over 2*n_orb spin orbitals. The chemists'
/// (pq|rs) tensor is converted to physicists' matrix elements here and
/// nowhere else. Constant term is e_nuc + e_core.
FermionOperator hamiltonian_operator(const MOIntegrals& mo);

FermionOperator number_operator(int n_spatial);
FermionOperator sz_operator(int n_spatial);
FermionOperator s_plus_operator(int n_spatial);
/// S^2 = S- S+ + Sz (Sz + 1).
FermionOperator s2_operator(int n_spatial);

}  // namespace uccvqe
