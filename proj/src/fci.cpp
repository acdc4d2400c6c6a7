// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/fci.hpp"

#include <bit>
#include <cmath>

#include "uccvqe/error.hpp"

namespace uccvqe {

namespace {

std::uint64_t det_key(const Determinant& d) {
  return (std::uint64_t(d.alpha) << 32) | d.beta;
}

std::vector<std::uint32_t> combinations(int n, int k) {
  std::vector<std::uint32_t> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::uint32_t mask = (1u << k) - 1;
  const std::uint32_t limit = 1u << n;
  while (mask < limit) {
    out.push_back(mask);
    // Gosper's hack: next subset with the same popcount.
    const std::uint32_t c = mask & -mask;
    const std::uint32_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
    if (r >= limit) break;
  }
  return out;
}

// Interleaved spin-orbital occupation mask (bit 2i alpha_i, 2i+1 beta_i).
std::uint32_t interleave(const Determinant& d, int n_spatial) {
  std::uint32_t m = 0;
  for (int i = 0; i < n_spatial; ++i) {
    if ((d.alpha >> i) & 1u) m |= 1u << (2 * i);
    if ((d.beta >> i) & 1u) m |= 1u << (2 * i + 1);
  }
  return m;
}

int parity_below(std::uint32_t occ, int mode) {
  const std::uint32_t below = mode == 0 ? 0 : occ & ((1u << mode) - 1);
  return std::popcount(below) & 1 ? -1 : 1;
}

// Sign of <J| a†_p a_m |I> given both determinants are compatible.
int single_sign(std::uint32_t occ_i, int m, int p) {
  int sign = parity_below(occ_i, m);
  const std::uint32_t mid = occ_i ^ (1u << m);
  sign *= parity_below(mid, p);
  return sign;
}

// Sign of <J| a†_p a†_q a_n a_m |I>.
int double_sign(std::uint32_t occ_i, int m, int n, int q, int p) {
  int sign = parity_below(occ_i, m);
  std::uint32_t occ = occ_i ^ (1u << m);
  sign *= parity_below(occ, n);
  occ ^= 1u << n;
  sign *= parity_below(occ, q);
  occ |= 1u << q;
  sign *= parity_below(occ, p);
  return sign;
}

struct SpinOrbitalIntegrals {
  const MOIntegrals& mo;
  double h(int p, int q) const {
    if ((p & 1) != (q & 1)) return 0.0;
    return mo.h(p >> 1, q >> 1);
  }
  // Physicists' <pq|rs> over spin orbitals.
  double phys(int p, int q, int r, int s) const {
    if ((p & 1) != (r & 1) || (q & 1) != (s & 1)) return 0.0;
    return mo.g(p >> 1, r >> 1, q >> 1, s >> 1);
  }
};

std::vector<int> occupied_modes(std::uint32_t occ) {
  std::vector<int> out;
  for (int m = 0; m < 32; ++m)
    if ((occ >> m) & 1u) out.push_back(m);
  return out;
}

Eigen::MatrixXd sector_hamiltonian(const MOIntegrals& mo, const SectorBasis& basis) {
  const SpinOrbitalIntegrals so{mo};
  const std::size_t dim = basis.size();
  const int n_sp = basis.n_spatial();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);

  std::vector<std::uint32_t> occs(dim);
  for (std::size_t i = 0; i < dim; ++i) occs[i] = interleave(basis.det(i), n_sp);

  for (std::size_t col = 0; col < dim; ++col) {
    const std::uint32_t oc = occs[col];
    const auto occ_list = occupied_modes(oc);
    for (std::size_t row = col; row < dim; ++row) {
      const std::uint32_t orow = occs[row];
      const std::uint32_t diff = oc ^ orow;
      const int n_diff = std::popcount(diff);
      double value = 0;
      if (n_diff == 0) {
        for (int m : occ_list) {
          value += so.h(m, m);
          for (int n : occ_list)
            value += 0.5 * (so.phys(m, n, m, n) - so.phys(m, n, n, m));
        }
        value += mo.constant();
      } else if (n_diff == 2) {
        const int m = std::countr_zero(diff & oc);
        const int p = std::countr_zero(diff & orow);
        double acc = so.h(m, p);
        for (int n : occ_list)
          if (n != m) acc += so.phys(m, n, p, n) - so.phys(m, n, n, p);
        value = single_sign(oc, m, p) * acc;
      } else if (n_diff == 4) {
        const std::uint32_t gone = diff & oc;
        const std::uint32_t born = diff & orow;
        if (std::popcount(gone) == 2) {
          const int m = std::countr_zero(gone);
          const int n = std::countr_zero(gone & (gone - 1));
          const int p = std::countr_zero(born);
          const int q = std::countr_zero(born & (born - 1));
          // <J|H|I> = sign(a†_p a†_q a_n a_m) (<pq|mn> - <pq|nm>)
          value = double_sign(oc, m, n, q, p) *
                  (so.phys(p, q, m, n) - so.phys(p, q, n, m));
        }
      }
      h(row, col) = value;
      h(col, row) = value;
    }
  }
  return h;
}

// S+ applied to a sector vector; returns (target basis, coefficients).
struct RaisedVector {
  SectorBasis basis;
  Eigen::VectorXd coeffs;
};

RaisedVector apply_s_plus(const SectorBasis& basis, const Eigen::VectorXd& v) {
  const int n_sp = basis.n_spatial();
  RaisedVector out{SectorBasis(n_sp, basis.n_alpha() + 1, basis.n_beta() - 1),
                   Eigen::VectorXd()};
  out.coeffs = Eigen::VectorXd::Zero(out.basis.size());
  if (basis.n_beta() == 0) return out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (v[i] == 0.0) continue;
    const Determinant d = basis.det(i);
    const std::uint32_t occ = interleave(d, n_sp);
    for (int p = 0; p < n_sp; ++p) {
      if (!((d.beta >> p) & 1u) || ((d.alpha >> p) & 1u)) continue;
      const int from = 2 * p + 1, to = 2 * p;
      Determinant nd{d.alpha | (1u << p), d.beta & ~(1u << p)};
      const long j = out.basis.index_of(nd);
      if (j < 0) continue;
      out.coeffs[j] += single_sign(occ, from, to) * v[i];
    }
  }
  return out;
}

double s2_expectation(const SectorBasis& basis, const Eigen::VectorXd& va,
                      const Eigen::VectorXd& vb) {
  const double sz = 0.5 * (basis.n_alpha() - basis.n_beta());
  const RaisedVector ra = apply_s_plus(basis, va);
  const RaisedVector rb = apply_s_plus(basis, vb);
  return ra.coeffs.dot(rb.coeffs) + sz * (sz + 1.0) * va.dot(vb);
}

}  // namespace

SectorBasis::SectorBasis(int n_spatial, int n_alpha, int n_beta)
    : n_spatial_(n_spatial), n_alpha_(n_alpha), n_beta_(n_beta) {
  if (n_spatial < 1 || n_spatial > 16) throw ValidationError("n_spatial out of range");
  if (n_alpha < 0 || n_beta < 0 || n_alpha > n_spatial || n_beta > n_spatial)
    throw ValidationError("empty determinant sector");
  const auto alphas = combinations(n_spatial, n_alpha);
  const auto betas = combinations(n_spatial, n_beta);
  dets_.reserve(alphas.size() * betas.size());
  for (std::uint32_t a : alphas)
    for (std::uint32_t b : betas) {
      lookup_.emplace(det_key({a, b}), dets_.size());
      dets_.push_back({a, b});
    }
  if (dets_.empty()) throw ValidationError("empty determinant sector");
}

long SectorBasis::index_of(const Determinant& d) const {
  auto it = lookup_.find(det_key(d));
  return it == lookup_.end() ? -1 : long(it->second);
}

std::uint32_t SectorBasis::qubit_index(std::size_t i) const {
  return interleave(dets_[i], n_spatial_);
}

FCISolution fci_solve(const MOIntegrals& mo, int n_electrons, int ms2, int n_roots) {
  mo.validate();
  if ((n_electrons + ms2) % 2 != 0)
    throw ValidationError("electron count and ms2 have mismatched parity");
  const int n_alpha = (n_electrons + ms2) / 2;
  const int n_beta = (n_electrons - ms2) / 2;
  const SectorBasis basis(mo.n_orb, n_alpha, n_beta);

  const Eigen::MatrixXd h = sector_hamiltonian(mo, basis);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  if (es.info() != Eigen::Success) throw Error("sector diagonalization failed");

  FCISolution sol;
  sol.n_spatial = mo.n_orb;
  sol.n_alpha = n_alpha;
  sol.n_beta = n_beta;
  const int keep = n_roots <= 0 ? int(basis.size())
                                : std::min<int>(n_roots, int(basis.size()));
  sol.eigenvalues = es.eigenvalues().head(keep);
  sol.eigenvectors = es.eigenvectors().leftCols(keep);

  // Rotate exactly degenerate blocks into S^2 eigenstates so the
  // per-root expectation is gauge independent.
  int b0 = 0;
  while (b0 < keep) {
    int b1 = b0 + 1;
    while (b1 < keep &&
           std::abs(sol.eigenvalues[b1] - sol.eigenvalues[b0]) <
               1e-10 * std::max(1.0, std::abs(sol.eigenvalues[b0])))
      ++b1;
    if (b1 - b0 > 1) {
      const int nb = b1 - b0;
      Eigen::MatrixXd s2_block(nb, nb);
      for (int a = 0; a < nb; ++a)
        for (int c = 0; c < nb; ++c)
          s2_block(a, c) =
              s2_expectation(basis, sol.eigenvectors.col(b0 + a), sol.eigenvectors.col(b0 + c));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> bs(s2_block);
      sol.eigenvectors.middleCols(b0, nb) =
          (sol.eigenvectors.middleCols(b0, nb) * bs.eigenvectors()).eval();
    }
    b0 = b1;
  }

  sol.s2 = Eigen::VectorXd(keep);
  for (int r = 0; r < keep; ++r)
    sol.s2[r] = s2_expectation(basis, sol.eigenvectors.col(r), sol.eigenvectors.col(r));
  return sol;
}

Eigen::VectorXd fci_spectrum(const MOIntegrals& mo, int n_electrons, int ms2) {
  return fci_solve(mo, n_electrons, ms2, 0).eigenvalues;
}

Statevector to_statevector(const SectorBasis& basis, const Eigen::VectorXd& coefficients) {
  if (std::size_t(coefficients.size()) != basis.size())
    throw ValidationError("coefficient vector does not match sector size");
  Statevector state(2 * basis.n_spatial());
  state.amplitudes().setZero();
  for (std::size_t i = 0; i < basis.size(); ++i)
    state.amplitudes()[basis.qubit_index(i)] = coefficients[i];
  return state;
}

}  // namespace uccvqe
