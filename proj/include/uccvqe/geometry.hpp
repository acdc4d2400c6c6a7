// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace uccvqe {

inline constexpr double kAngstromToBohr = 1.8897259886;

struct Atom {
  std::string element;
  int charge = 1;              // nuclear charge Z
  Eigen::Vector3d position;    // Angstrom
};

/// Molecular geometry with total charge; electron count is derived.
struct Geometry {
  std::vector<Atom> atoms;
  int charge = 0;

  int n_electrons() const;
  /// Nuclear repulsion in Hartree.
  double nuclear_repulsion() const;
  /// Throws GeometryError on coincident atoms, non-finite positions,
  /// or fewer than one electron.
  void validate() const;

  Geometry translated(const Eigen::Vector3d& shift_angstrom) const;
  Geometry rotated(const Eigen::Matrix3d& rotation) const;
};

/// n hydrogens at the given positions (Angstrom).
Geometry hydrogens(const std::vector<Eigen::Vector3d>& positions, int charge = 0);

}  // namespace uccvqe
