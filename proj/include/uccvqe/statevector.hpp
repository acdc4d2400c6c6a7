// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "uccvqe/pauli.hpp"

namespace uccvqe {

inline constexpr int kMaxQubits = 16;

/// Dense complex amplitude vector over 2^n basis states. Basis-index
/// bit b corresponds to qubit b occupation; bitstrings render qubit 0
/// leftmost.
class Statevector {
 public:
  explicit Statevector(int n_qubits);
  static Statevector basis_state(int n_qubits, std::uint32_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return std::size_t(1) << n_qubits_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }

  void apply_x(int qubit);
  void apply_h(int qubit);
  void apply_cnot(int control, int target);

  double norm() const { return amps_.norm(); }
  void normalize();

 private:
  int n_qubits_;
  Eigen::VectorXcd amps_;
};

std::string bitstring(std::uint32_t index, int n_qubits);
std::uint32_t parse_bitstring(const std::string& bits);

cplx overlap(const Statevector& a, const Statevector& b);
/// |<a|b>|; equality of states up to global phase means fidelity ~ 1.
double fidelity(const Statevector& a, const Statevector& b);

/// state <- cos(theta) state + i sin(theta) P state. Exact for P^2 = I.
void apply_pauli_exponential(Statevector& state, const PauliString& p, double theta);

/// op |state>, term by term (not necessarily norm preserving).
Statevector apply_operator(const QubitOperator& op, const Statevector& state);

/// <state|op|state> for Hermitian op; the imaginary residue must stay
/// below 1e-10 and is discarded. Throws ValidationError otherwise.
double expectation(const Statevector& state, const QubitOperator& op);

/// Entries with probability >= cutoff, sorted by probability descending.
std::vector<std::pair<std::string, cplx>> dominant_determinants(const Statevector& state,
                                                                double cutoff);

/// Lines "bitstring re im" for amplitudes above the threshold.
std::string dump_amplitudes(const Statevector& state, double threshold = 1e-8);

}  // namespace uccvqe
