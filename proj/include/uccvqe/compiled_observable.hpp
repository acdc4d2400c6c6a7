// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "uccvqe/pauli.hpp"
#include "uccvqe/statevector.hpp"

namespace uccvqe {

/// Precomputed column-value form of a Hermitian QubitOperator for fast
/// repeated expectation values: terms sharing an X-flip mask are merged
/// into one dense column table. Falls back to term-wise evaluation when
/// the table would exceed the memory cap.
class CompiledObservable {
 public:
  CompiledObservable() = default;
  CompiledObservable(const QubitOperator& op, int n_qubits);

  double expectation(const Statevector& state) const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& amps) const;
  bool tabulated() const { return tabulated_; }

 private:
  struct Group {
    std::uint32_t flip = 0;
    Eigen::VectorXcd column;  // value[i] multiplies amps[i] into out[i ^ flip]
  };
  int n_qubits_ = 0;
  bool tabulated_ = false;
  std::vector<Group> groups_;
  QubitOperator fallback_;
};

}  // namespace uccvqe
