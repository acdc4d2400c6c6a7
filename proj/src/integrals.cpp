// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/integrals.hpp"

#include <cmath>
#include <vector>

#include "uccvqe/error.hpp"
#include "uccvqe/four_index.hpp"

namespace uccvqe {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Primitive {
  double alpha;
  double coeff;  // contraction coefficient times primitive norm
  Eigen::Vector3d center;  // Bohr
};

struct Shell {
  std::vector<Primitive> primitives;
};

std::vector<Shell> flatten(const Geometry& geometry, const BasisSet& basis) {
  if (basis.atom_shells.size() != geometry.atoms.size())
    throw UnsupportedBasisError("basis/geometry atom count mismatch");
  std::vector<Shell> shells;
  for (std::size_t a = 0; a < geometry.atoms.size(); ++a) {
    const Eigen::Vector3d center = geometry.atoms[a].position * kAngstromToBohr;
    for (const auto& cs : basis.atom_shells[a]) {
      Shell sh;
      for (std::size_t i = 0; i < cs.exponents.size(); ++i) {
        const double alpha = cs.exponents[i];
        sh.primitives.push_back({alpha, cs.coefficients[i] * std::pow(2.0 * alpha / kPi, 0.75), center});
      }
      shells.push_back(std::move(sh));
    }
  }
  return shells;
}

}  // namespace

double boys_f0(double x) {
  if (x < 1e-6) return 1.0 - x / 3.0 + x * x / 10.0 - x * x * x / 42.0;
  const double s = std::sqrt(x);
  return 0.5 * std::sqrt(kPi) * std::erf(s) / s;
}

AOIntegrals compute_s_integrals(const Geometry& geometry, const BasisSet& basis) {
  geometry.validate();
  basis.validate();
  const auto shells = flatten(geometry, basis);
  const int n = int(shells.size());

  AOIntegrals out;
  out.e_nuc = geometry.nuclear_repulsion();
  out.overlap = Eigen::MatrixXd::Zero(n, n);
  out.kinetic = Eigen::MatrixXd::Zero(n, n);
  out.nuclear = Eigen::MatrixXd::Zero(n, n);
  out.eri = FourIndexTensor(n);

  std::vector<Eigen::Vector3d> nuclei;
  std::vector<double> charges;
  for (const auto& atom : geometry.atoms) {
    nuclei.push_back(atom.position * kAngstromToBohr);
    charges.push_back(double(atom.charge));
  }

  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double s = 0, t = 0, v = 0;
      for (const auto& pa : shells[i].primitives)
        for (const auto& pb : shells[j].primitives) {
          const double p = pa.alpha + pb.alpha;
          const double mu = pa.alpha * pb.alpha / p;
          const double ab2 = (pa.center - pb.center).squaredNorm();
          const double pre = pa.coeff * pb.coeff * std::exp(-mu * ab2);
          const double s_pair = pre * std::pow(kPi / p, 1.5);
          s += s_pair;
          t += mu * (3.0 - 2.0 * mu * ab2) * s_pair;
          const Eigen::Vector3d P = (pa.alpha * pa.center + pb.alpha * pb.center) / p;
          for (std::size_t c = 0; c < nuclei.size(); ++c)
            v -= charges[c] * pre * (2.0 * kPi / p) * boys_f0(p * (P - nuclei[c]).squaredNorm());
        }
      out.overlap(i, j) = out.overlap(j, i) = s;
      out.kinetic(i, j) = out.kinetic(j, i) = t;
      out.nuclear(i, j) = out.nuclear(j, i) = v;
    }

  // (ij|kl) over unique index quadruples, spread by 8-fold symmetry.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= (k == i ? j : k); ++l) {
          double g = 0;
          for (const auto& pa : shells[i].primitives)
            for (const auto& pb : shells[j].primitives) {
              const double p = pa.alpha + pb.alpha;
              const double kab = std::exp(-pa.alpha * pb.alpha / p *
                                          (pa.center - pb.center).squaredNorm());
              const Eigen::Vector3d P = (pa.alpha * pa.center + pb.alpha * pb.center) / p;
              for (const auto& pc : shells[k].primitives)
                for (const auto& pd : shells[l].primitives) {
                  const double q = pc.alpha + pd.alpha;
                  const double kcd = std::exp(-pc.alpha * pd.alpha / q *
                                              (pc.center - pd.center).squaredNorm());
                  const Eigen::Vector3d Q = (pc.alpha * pc.center + pd.alpha * pd.center) / q;
                  const double rho = p * q / (p + q);
                  g += pa.coeff * pb.coeff * pc.coeff * pd.coeff * kab * kcd *
                       2.0 * std::pow(kPi, 2.5) / (p * q * std::sqrt(p + q)) *
                       boys_f0(rho * (P - Q).squaredNorm());
                }
            }
          out.eri.set_symmetric(i, j, k, l, g);
        }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(out.overlap);
  const double emin = es.eigenvalues().minCoeff();
  const double emax = es.eigenvalues().maxCoeff();
  if (!(emin > 0) || emax / emin > 1e12)
    throw LinearDependenceError("overlap matrix is near singular (condition number > 1e12)");
  return out;
}

}  // namespace uccvqe
