// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/geometry.hpp"

#include <cmath>

#include "uccvqe/error.hpp"

namespace uccvqe {

int Geometry::n_electrons() const {
  int z = 0;
  for (const auto& a : atoms) z += a.charge;
  return z - charge;
}

double Geometry::nuclear_repulsion() const {
  double e = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      const double r = (atoms[i].position - atoms[j].position).norm() * kAngstromToBohr;
      e += atoms[i].charge * atoms[j].charge / r;
    }
  return e;
}

void Geometry::validate() const {
  if (atoms.empty()) throw GeometryError("geometry has no atoms");
  if (n_electrons() < 1) throw GeometryError("geometry has fewer than one electron");
  for (const auto& a : atoms)
    if (!a.position.allFinite()) throw GeometryError("non-finite atomic position");
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      if ((atoms[i].position - atoms[j].position).norm() < 1e-6)
        throw GeometryError("coincident atoms " + std::to_string(i) + "," + std::to_string(j));
}

Geometry Geometry::translated(const Eigen::Vector3d& shift) const {
  Geometry out = *this;
  for (auto& a : out.atoms) a.position += shift;
  return out;
}

Geometry Geometry::rotated(const Eigen::Matrix3d& rotation) const {
  Geometry out = *this;
  for (auto& a : out.atoms) a.position = rotation * a.position;
  return out;
}

Geometry hydrogens(const std::vector<Eigen::Vector3d>& positions, int charge) {
  Geometry g;
  g.charge = charge;
  for (const auto& p : positions) g.atoms.push_back({"H", 1, p});
  return g;
}

}  // namespace uccvqe
