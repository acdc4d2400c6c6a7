// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "uccvqe/statevector.hpp"

namespace uccvqe {

/// Initial qubit registers: closed-shell singlet (S/S1), triplet (T),
/// doublet (D), quadruplet (Q) single determinants, and the
/// multireference singlet circuits S2 (closed shell pair) and S3
/// (open shell pair). S is a synonym for S1.
enum class RegisterLabel { S1, S2, S3, T, D, Q };

RegisterLabel parse_register_label(const std::string& s);
std::string to_string(RegisterLabel label);

struct PrepGate {
  enum class Kind { X, H, CNOT } kind = Kind::X;
  int qubit = 0;
  int target = 0;  // CNOT target; qubit is the control
};
using PrepCircuit = std::vector<PrepGate>;

/// Gate list preparing the register from |0...0>.
PrepCircuit register_circuit(RegisterLabel label, int n_electrons, int n_qubits);

void apply_circuit(Statevector& state, const PrepCircuit& circuit);

Statevector prepare_register(RegisterLabel label, int n_electrons, int n_qubits);

/// Occupation masks of the determinants superposed in the register
/// (one for single-reference labels, two for S2/S3). Bit b = qubit b.
std::vector<std::uint32_t> register_determinants(RegisterLabel label, int n_electrons,
                                                 int n_qubits);

/// Twice the Sz eigenvalue of the register.
int register_ms2(RegisterLabel label);

bool is_single_reference(RegisterLabel label);
/// Every determinant in the register pairs alpha with beta in the same
/// spatial orbital.
bool is_closed_shell(RegisterLabel label);

/// Spatial orbitals carrying any electron in the register's determinants.
std::vector<int> occupied_spatials(RegisterLabel label, int n_electrons, int n_qubits);

}  // namespace uccvqe
