// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "uccvqe/error.hpp"
#include "uccvqe/scan.hpp"

namespace uccvqe {

std::vector<double> scan_values(const RunConfig& config) {
  std::vector<double> values;
  for (double v = config.scan_start; v <= config.scan_stop + 1e-9; v += config.scan_step)
    values.push_back(v);
  return values;
}

Geometry template_geometry(const RunConfig& config, double scan_value) {
  const std::string& m = config.molecule;
  if (m == "h2") {
    // scan variable: bond length (Angstrom)
    return hydrogens({{0, 0, 0}, {0, 0, scan_value}});
  }
  if (m == "h3" || m == "h3+") {
    // linear chain; the first bond is fixed, the second is scanned
    const double fixed = config.h3_fixed_bond;
    return hydrogens({{0, 0, 0}, {0, 0, fixed}, {0, 0, fixed + scan_value}},
                     m == "h3+" ? 1 : 0);
  }
  if (m == "h4") {
    // trapezoid: three bonds of fixed length, the H-H-H angle is scanned
    // (90 deg: square, 180 deg: chain).
    const double a = config.h4_bond;
    const double th = scan_value * M_PI / 180.0;
    return hydrogens({{a * std::cos(th), a * std::sin(th), 0},
                      {0, 0, 0},
                      {a, 0, 0},
                      {a - a * std::cos(th), a * std::sin(th), 0}});
  }
  throw ValidationError("no geometry template for molecule: " + m);
}

}  // namespace uccvqe
