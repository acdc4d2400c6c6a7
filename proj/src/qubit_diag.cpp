// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <bit>
#include <unordered_map>
#include <vector>

#include "uccvqe/error.hpp"
#include "uccvqe/fci.hpp"

namespace uccvqe {

Eigen::VectorXd qubit_space_diagonalize(const QubitOperator& h, int n_electrons, int ms2) {
  const int n_qubits = h.n_qubits();
  if (n_qubits > kMaxQubits) throw ValidationError("qubit register exceeds the dense cap");
  if ((n_electrons + ms2) % 2 != 0)
    throw ValidationError("electron count and ms2 have mismatched parity");
  const int n_alpha = (n_electrons + ms2) / 2;
  const int n_beta = (n_electrons - ms2) / 2;
  if (n_alpha < 0 || n_beta < 0) throw ValidationError("empty sector");

  std::uint32_t alpha_mask = 0;
  for (int q = 0; q < n_qubits; q += 2) alpha_mask |= 1u << q;

  std::vector<std::uint32_t> states;
  std::unordered_map<std::uint32_t, int> where;
  const std::uint32_t dim_full = std::uint32_t(1) << n_qubits;
  for (std::uint32_t i = 0; i < dim_full; ++i) {
    if (std::popcount(i & alpha_mask) != n_alpha) continue;
    if (std::popcount(i & ~alpha_mask & (dim_full - 1)) != n_beta) continue;
    where.emplace(i, int(states.size()));
    states.push_back(i);
  }
  if (states.empty()) throw ValidationError("empty sector");

  const std::size_t dim = states.size();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  static const cplx kIPow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  for (const auto& [key, coeff] : h.terms()) {
    const PauliString p = PauliString::from_key(key);
    const cplx u = kIPow[std::popcount(p.x & p.z) % 4];
    for (std::size_t c = 0; c < dim; ++c) {
      const std::uint32_t i = states[c];
      auto it = where.find(i ^ p.x);
      if (it == where.end()) continue;  // outside the (N, Sz) block
      const double sign = (std::popcount(i & p.z) & 1) ? -1.0 : 1.0;
      m(it->second, c) += coeff * u * sign;
    }
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw ValidationError("projected Hamiltonian block is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  if (es.info() != Eigen::Success) throw Error("qubit-space diagonalization failed");
  return es.eigenvalues();
}

}  // namespace uccvqe
