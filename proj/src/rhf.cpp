// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/rhf.hpp"

#include <deque>

#include "uccvqe/error.hpp"

namespace uccvqe {

namespace {

Eigen::MatrixXd two_electron_fock(const FourIndexTensor& eri, const Eigen::MatrixXd& density) {
  const int n = int(density.rows());
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          acc += density(k, l) * (eri(i, j, l, k) - 0.5 * eri(i, k, l, j));
      g(i, j) = acc;
    }
  return g;
}

}  // namespace

int closed_shell_electron_count(int n_electrons) { return n_electrons - (n_electrons & 1); }

RhfResult run_rhf(const Geometry& geometry, const AOIntegrals& ao) {
  const int n = geometry.n_electrons();
  if (n % 2 != 0)
    throw ValidationError("restricted SCF needs an even electron count; got " +
                          std::to_string(n));
  return run_rhf(geometry, ao, n);
}

RhfResult run_rhf(const Geometry& geometry, const AOIntegrals& ao, int n_electrons_scf) {
  if (n_electrons_scf <= 0 || n_electrons_scf % 2 != 0)
    throw ValidationError("SCF electron count must be even and positive");
  const int n = int(ao.overlap.rows());
  const int n_occ = n_electrons_scf / 2;
  if (n_occ > n) throw ValidationError("more electron pairs than basis functions");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s_es(ao.overlap);
  const Eigen::MatrixXd s_half_inv =
      s_es.eigenvectors() *
      s_es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
      s_es.eigenvectors().transpose();

  const Eigen::MatrixXd h_core = ao.kinetic + ao.nuclear;
  Eigen::MatrixXd fock = h_core;
  Eigen::MatrixXd density = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd coeffs;
  Eigen::VectorXd eps;

  std::deque<Eigen::MatrixXd> diis_f, diis_e;
  const int kMaxDiis = 8;
  const int kMaxIter = 200;
  double energy = 0, last_energy = 0, residual = 1;

  for (int iter = 1; iter <= kMaxIter; ++iter) {
    Eigen::MatrixXd f_use = fock;
    if (!diis_f.empty()) {
      // DIIS extrapolation over stored Fock matrices.
      const int m = int(diis_f.size());
      Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m + 1, m + 1);
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
      for (int a = 0; a < m; ++a)
        for (int bix = 0; bix < m; ++bix)
          b(a, bix) = (diis_e[a].array() * diis_e[bix].array()).sum();
      for (int a = 0; a < m; ++a) b(a, m) = b(m, a) = -1.0;
      rhs(m) = -1.0;
      const Eigen::VectorXd w = b.colPivHouseholderQr().solve(rhs);
      if (w.allFinite()) {
        f_use.setZero();
        for (int a = 0; a < m; ++a) f_use += w(a) * diis_f[a];
      }
    }

    const Eigen::MatrixXd f_ortho = s_half_inv * f_use * s_half_inv;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> f_es(f_ortho);
    coeffs = s_half_inv * f_es.eigenvectors();
    eps = f_es.eigenvalues();

    const Eigen::MatrixXd c_occ = coeffs.leftCols(n_occ);
    const Eigen::MatrixXd new_density = 2.0 * c_occ * c_occ.transpose();
    residual = (new_density - density).norm();
    density = new_density;

    fock = h_core + two_electron_fock(ao.eri, density);
    last_energy = energy;
    energy = 0.5 * (density.array() * (h_core + fock).array()).sum();

    const Eigen::MatrixXd err = fock * density * ao.overlap - ao.overlap * density * fock;
    diis_f.push_back(fock);
    diis_e.push_back(s_half_inv * err * s_half_inv);
    if (int(diis_f.size()) > kMaxDiis) {
      diis_f.pop_front();
      diis_e.pop_front();
    }

    if (iter > 1 && residual < 1e-8 && std::abs(energy - last_energy) < 1e-10) {
      RhfResult out;
      out.coefficients = coeffs;
      out.orbital_energies = eps;
      out.electronic_energy = energy;
      out.energy = energy + ao.e_nuc;
      out.iterations = iter;
      (void)geometry;
      return out;
    }
  }
  throw ScfConvergenceError("SCF did not converge within 200 iterations", energy + ao.e_nuc,
                            residual);
}

}  // namespace uccvqe
