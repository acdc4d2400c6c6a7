// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/brueckner.hpp"

#include <bit>
#include <cmath>

#include "uccvqe/error.hpp"
#include "uccvqe/fermion.hpp"
#include "uccvqe/second_quantization.hpp"

namespace uccvqe {

namespace {

int parity_below(std::uint32_t occ, int mode) {
  const std::uint32_t below = mode == 0 ? 0 : occ & ((1u << mode) - 1);
  return std::popcount(below) & 1 ? -1 : 1;
}

std::uint32_t interleave(const Determinant& d, int n_spatial) {
  std::uint32_t m = 0;
  for (int i = 0; i < n_spatial; ++i) {
    if ((d.alpha >> i) & 1u) m |= 1u << (2 * i);
    if ((d.beta >> i) & 1u) m |= 1u << (2 * i + 1);
  }
  return m;
}

}  // namespace

Statevector brueckner_reference(const FCISolution& fci, int root, const Determinant& hf_det) {
  if (root < 0 || root >= fci.eigenvalues.size()) throw ValidationError("FCI root out of range");
  const SectorBasis basis(fci.n_spatial, fci.n_alpha, fci.n_beta);
  const long hf_index = basis.index_of(hf_det);
  if (hf_index < 0) throw ValidationError("HF determinant lies outside the FCI sector");

  const Eigen::VectorXd v = fci.eigenvectors.col(root);
  const double c_hf = v[hf_index];
  if (std::abs(c_hf) < 1e-6)
    throw ReferenceDominationError(
        "HF coefficient below 1e-6; intermediate normalization is ill-defined");

  const int n_sp = fci.n_spatial;
  const std::uint32_t hf_occ = interleave(hf_det, n_sp);

  // Collect singles amplitudes t_{m->p} = sign * c_single / c_HF.
  FermionOperator t1;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (long(j) == hf_index) continue;
    const std::uint32_t occ = interleave(basis.det(j), n_sp);
    const std::uint32_t diff = occ ^ hf_occ;
    if (std::popcount(diff) != 2) continue;
    const int m = std::countr_zero(diff & hf_occ);
    const int p = std::countr_zero(diff & occ);
    // <J| a†_p a_m |HF> sign
    int sign = parity_below(hf_occ, m);
    sign *= parity_below(hf_occ ^ (1u << m), p);
    const double amp = sign * v[j] / c_hf;
    if (amp != 0.0) t1.add_term({{p, true}, {m, false}}, amp);
  }

  const int n_qubits = 2 * n_sp;
  Statevector state = Statevector::basis_state(n_qubits, hf_occ);
  if (!t1.empty()) {
    const QubitOperator t1_q = jordan_wigner(t1, n_qubits);
    // exp(T1)|HF| by Taylor series; T1 is small in practice, and the
    // series is truncated at machine precision.
    Statevector term = state;
    for (int k = 1; k <= 64; ++k) {
      term = apply_operator(t1_q, term);
      term.amplitudes() /= double(k);
      state.amplitudes() += term.amplitudes();
      if (term.norm() < 1e-15) break;
    }
  }
  state.normalize();
  return state;
}

}  // namespace uccvqe
