// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/second_quantization.hpp"

#include <stdexcept>

namespace uccvqe {

namespace {

// a_p   -> Z_{p-1..0} (X_p + iY_p)/2
// a†_p  -> Z_{p-1..0} (X_p - iY_p)/2
QubitOperator ladder_qubit_op(const LadderOp& op, int n_qubits) {
  if (op.mode >= n_qubits) throw std::out_of_range("ladder mode exceeds register size");
  const std::uint32_t zstring = (std::uint32_t(1) << op.mode) - 1;
  QubitOperator out(n_qubits);
  PauliString px = PauliString::single(op.mode, 'X');
  px.z |= zstring;
  PauliString py = PauliString::single(op.mode, 'Y');
  py.z |= zstring;
  out.add_term(px, cplx(0.5, 0.0));
  out.add_term(py, op.create ? cplx(0.0, -0.5) : cplx(0.0, 0.5));
  return out;
}

}  // namespace

QubitOperator jordan_wigner(const FermionOperator& op, int n_qubits) {
  QubitOperator out(n_qubits);
  for (const auto& [key, coeff] : op.terms()) {
    QubitOperator product = QubitOperator::identity(n_qubits, coeff);
    for (const auto& lop : FermionOperator::decode(key))
      product = product * ladder_qubit_op(lop, n_qubits);
    out += product;
  }
  return out;
}

}  // namespace uccvqe
