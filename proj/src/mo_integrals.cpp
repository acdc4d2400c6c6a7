// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/mo_integrals.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "uccvqe/error.hpp"

namespace uccvqe {

void FourIndexTensor::set_symmetric(int p, int q, int r, int s, double v) {
  (*this)(p, q, r, s) = v;
  (*this)(q, p, r, s) = v;
  (*this)(p, q, s, r) = v;
  (*this)(q, p, s, r) = v;
  (*this)(r, s, p, q) = v;
  (*this)(s, r, p, q) = v;
  (*this)(r, s, q, p) = v;
  (*this)(s, r, q, p) = v;
}

double FourIndexTensor::symmetry_defect() const {
  double worst = 0;
  for (int p = 0; p < n_; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= (r == p ? q : r); ++s) {
          const double v = (*this)(p, q, r, s);
          const double images[7] = {(*this)(q, p, r, s), (*this)(p, q, s, r),
                                    (*this)(q, p, s, r), (*this)(r, s, p, q),
                                    (*this)(s, r, p, q), (*this)(r, s, q, p),
                                    (*this)(s, r, q, p)};
          for (double im : images) worst = std::max(worst, std::abs(im - v));
        }
  return worst;
}

void MOIntegrals::validate(double tol) const {
  if (n_orb < 0 || h.rows() != n_orb || h.cols() != n_orb || g.dim() != n_orb)
    throw ValidationError("MO integral dimensions inconsistent");
  if (!h.allFinite() || !g.data().allFinite() || !std::isfinite(e_nuc) || !std::isfinite(e_core))
    throw ValidationError("MO integrals contain non-finite values");
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > tol)
    throw ValidationError("one-electron matrix not symmetric");
  if (g.symmetry_defect() > tol)
    throw ValidationError("two-electron tensor breaks (pq|rs) permutation symmetry");
}

MOIntegrals transform_to_mo(const AOIntegrals& ao, const Eigen::MatrixXd& c,
                            const std::vector<int>& frozen_core) {
  const int n_ao = int(ao.overlap.rows());
  const int n_mo = int(c.cols());
  MOIntegrals mo;
  mo.n_orb = n_mo;
  mo.e_nuc = ao.e_nuc;
  mo.h = c.transpose() * (ao.kinetic + ao.nuclear) * c;

  // Four sequential quarter-transforms of (pq|rs).
  FourIndexTensor t1(n_ao), t2(n_ao), g(n_mo);
  {
    FourIndexTensor half(n_ao);
    for (int p = 0; p < n_mo; ++p)
      for (int q = 0; q < n_ao; ++q)
        for (int r = 0; r < n_ao; ++r)
          for (int s = 0; s < n_ao; ++s) {
            double acc = 0;
            for (int mu = 0; mu < n_ao; ++mu) acc += c(mu, p) * ao.eri(mu, q, r, s);
            if (p < n_mo) half(p, q, r, s) = acc;
          }
    for (int p = 0; p < n_mo; ++p)
      for (int q = 0; q < n_mo; ++q)
        for (int r = 0; r < n_ao; ++r)
          for (int s = 0; s < n_ao; ++s) {
            double acc = 0;
            for (int nu = 0; nu < n_ao; ++nu) acc += c(nu, q) * half(p, nu, r, s);
            t1(p, q, r, s) = acc;
          }
    for (int p = 0; p < n_mo; ++p)
      for (int q = 0; q < n_mo; ++q)
        for (int r = 0; r < n_mo; ++r)
          for (int s = 0; s < n_ao; ++s) {
            double acc = 0;
            for (int la = 0; la < n_ao; ++la) acc += c(la, r) * t1(p, q, la, s);
            t2(p, q, r, s) = acc;
          }
    for (int p = 0; p < n_mo; ++p)
      for (int q = 0; q < n_mo; ++q)
        for (int r = 0; r < n_mo; ++r)
          for (int s = 0; s < n_mo; ++s) {
            double acc = 0;
            for (int si = 0; si < n_ao; ++si) acc += c(si, s) * t2(p, q, r, si);
            g(p, q, r, s) = acc;
          }
  }
  mo.g = std::move(g);
  if (frozen_core.empty()) return mo;
  return fold_core(mo, frozen_core);
}

MOIntegrals fold_core(const MOIntegrals& mo, const std::vector<int>& frozen_core) {
  if (frozen_core.empty()) return mo;
  std::set<int> frozen(frozen_core.begin(), frozen_core.end());
  for (int f : frozen)
    if (f < 0 || f >= mo.n_orb)
      throw std::out_of_range("frozen orbital index " + std::to_string(f) + " out of range");

  std::vector<int> active;
  for (int p = 0; p < mo.n_orb; ++p)
    if (!frozen.count(p)) active.push_back(p);

  MOIntegrals out;
  out.n_orb = int(active.size());
  out.e_nuc = mo.e_nuc;
  out.e_core = mo.e_core;
  for (int i : frozen) {
    out.e_core += 2.0 * mo.h(i, i);
    for (int j : frozen) out.e_core += 2.0 * mo.g(i, i, j, j) - mo.g(i, j, j, i);
  }
  out.h = Eigen::MatrixXd::Zero(out.n_orb, out.n_orb);
  for (int p = 0; p < out.n_orb; ++p)
    for (int q = 0; q < out.n_orb; ++q) {
      double v = mo.h(active[p], active[q]);
      for (int i : frozen)
        v += 2.0 * mo.g(active[p], active[q], i, i) - mo.g(active[p], i, i, active[q]);
      out.h(p, q) = v;
    }
  out.g = FourIndexTensor(out.n_orb);
  for (int p = 0; p < out.n_orb; ++p)
    for (int q = 0; q < out.n_orb; ++q)
      for (int r = 0; r < out.n_orb; ++r)
        for (int s = 0; s < out.n_orb; ++s)
          out.g(p, q, r, s) = mo.g(active[p], active[q], active[r], active[s]);
  return out;
}

}  // namespace uccvqe
