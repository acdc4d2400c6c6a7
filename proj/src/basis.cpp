// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/basis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "uccvqe/error.hpp"

namespace uccvqe {

namespace {

constexpr double kPi = 3.14159265358979323846;

double primitive_norm(double alpha) { return std::pow(2.0 * alpha / kPi, 0.75); }

// <g_i|g_j> for normalized primitives sharing a center.
double primitive_pair_overlap(double a, double b) {
  return primitive_norm(a) * primitive_norm(b) * std::pow(kPi / (a + b), 1.5);
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

double ContractedShell::self_overlap() const {
  double s = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    for (std::size_t j = 0; j < exponents.size(); ++j)
      s += coefficients[i] * coefficients[j] * primitive_pair_overlap(exponents[i], exponents[j]);
  return s;
}

void ContractedShell::normalize() {
  const double s = self_overlap();
  if (s <= 0) throw UnsupportedBasisError("contracted shell with non-positive self-overlap");
  const double scale = 1.0 / std::sqrt(s);
  for (auto& c : coefficients) c *= scale;
}

int BasisSet::n_functions() const {
  int n = 0;
  for (const auto& shells : atom_shells) n += int(shells.size());
  return n;
}

void BasisSet::validate() const {
  for (const auto& shells : atom_shells)
    for (const auto& sh : shells) {
      if (sh.exponents.empty() || sh.exponents.size() != sh.coefficients.size())
        throw UnsupportedBasisError("malformed contracted shell");
      for (double e : sh.exponents)
        if (!(e > 0)) throw UnsupportedBasisError("non-positive exponent");
      if (std::abs(sh.self_overlap() - 1.0) > 1e-10)
        throw UnsupportedBasisError("contracted shell not normalized");
    }
}

BasisSet build_basis(const std::string& name, const Geometry& geometry) {
  const std::string key = lowercase(name);
  BasisSet basis;
  for (const auto& atom : geometry.atoms) {
    if (atom.charge != 1)
      throw UnsupportedBasisError("s-orbital engine supports hydrogen only; element " +
                                  atom.element + " requires an FCIDUMP source");
    std::vector<ContractedShell> shells;
    if (key == "sto-3g") {
      shells.push_back({{3.425250914, 0.6239137298, 0.1688554040},
                        {0.1543289673, 0.5353281423, 0.4446345422}});
    } else if (key == "6-31g") {
      shells.push_back({{18.73113696, 2.825394365, 0.6401216923},
                        {0.03349460434, 0.2347269535, 0.8137573261}});
      shells.push_back({{0.1612777588}, {1.0}});
    } else {
      throw UnsupportedBasisError("unknown basis set: " + name);
    }
    for (auto& sh : shells) sh.normalize();
    basis.atom_shells.push_back(std::move(shells));
  }
  basis.validate();
  return basis;
}

}  // namespace uccvqe
