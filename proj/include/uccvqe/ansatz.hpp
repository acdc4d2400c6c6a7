// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "uccvqe/pauli.hpp"
#include "uccvqe/registers.hpp"
#include "uccvqe/statevector.hpp"

namespace uccvqe {

/// Cluster-operator families. Primed (Sp) variants share one amplitude
/// between the alpha-alpha and beta-beta single of a spatial pair; G
/// marks generalized excitations; Up marks pair-restricted doubles.
enum class AnsatzFamily {
  UCCSD,
  UCCSpD,
  UCCD,
  UCCGSD,
  UCCGSpD,
  UCCGD,
  UpCCGSD,
  UpCCGSpD,
  UpCCGD,
  UpCCSGD,
  UpCCSpGD,
};

AnsatzFamily parse_ansatz_family(const std::string& name);  // accepts "UCCS'D", "k-UpCCGSD", ...
std::string to_string(AnsatzFamily family);
bool is_k_family(AnsatzFamily family);

struct AnsatzSpec {
  AnsatzFamily family = AnsatzFamily::UCCSD;
  int k = 1;
  int n_spatial = 0;
  int n_electrons = 0;
  RegisterLabel reference = RegisterLabel::S1;

  int n_qubits() const { return 2 * n_spatial; }
  /// Throws IncompatibleAnsatzError on family/register mismatches
  /// (single-reference-only families on S2/S3, primed or pair-double
  /// families on the open-shell S3 register, non-k families with k > 1).
  void validate() const;
};

struct Excitation {
  enum class Kind { Single, SharedSingle, PairedDouble, GeneralDouble };
  Kind kind = Kind::Single;
  // Single: {from_so, to_so}. SharedSingle/PairedDouble: {P, Q} spatial.
  // GeneralDouble: annihilate {p < q}, create {r < s} (spin orbitals).
  std::array<int, 4> idx{-1, -1, -1, -1};

  /// Number of generators one amplitude drives (2 for shared singles).
  int sharing_multiplicity() const { return kind == Kind::SharedSingle ? 2 : 1; }
  std::string str() const;
};

/// One optimizable amplitude per entry; k factors hold disjoint blocks.
struct ParameterMap {
  struct Entry {
    Excitation excitation;
    int k_factor = 1;
  };
  std::vector<Entry> entries;
  int n_params() const { return int(entries.size()); }
};

ParameterMap enumerate_excitations(const AnsatzSpec& spec);

/// One Pauli rotation of the Trotterized circuit: angle = weight * params[param].
struct CompiledRotation {
  PauliString pauli;
  double weight = 0;
  int param = 0;
};

struct CompiledCircuit {
  std::vector<CompiledRotation> rotations;
  int n_params = 0;
  int n_qubits = 0;

  /// Applies every rotation in order; runs sharing a flip mask are
  /// processed in one pass (bit-identical to one-by-one application).
  void apply(Statevector& state, const Eigen::VectorXd& params) const;
};

/// Fixed deterministic compilation: k factors in order (k = 1 applied
/// first), singles before doubles inside a factor, excitations in
/// lexicographic index order, JW terms in canonical string order.
CompiledCircuit compile_circuit(const AnsatzSpec& spec, const ParameterMap& map);

/// Materialized gate list at given amplitudes; zero-angle rotations are
/// dropped, so params = 0 yields an empty sequence.
std::vector<std::pair<PauliString, double>> gate_sequence(const CompiledCircuit& circuit,
                                                          const Eigen::VectorXd& params);

/// Text catalog of the enumeration, for golden tests.
std::string ansatz_catalog(const AnsatzSpec& spec, const ParameterMap& map);

/// Per-class |t| weights in percent, Table-style classes; occupied
/// spatial orbitals are taken from the reference register. Throws
/// ValidationError when all amplitudes vanish.
std::vector<std::pair<std::string, double>> classify_amplitudes(
    const ParameterMap& map, const Eigen::VectorXd& params,
    const std::vector<int>& occupied_spatial);

}  // namespace uccvqe
