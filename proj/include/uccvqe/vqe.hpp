// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "uccvqe/ansatz.hpp"
#include "uccvqe/compiled_observable.hpp"
#include "uccvqe/lbfgs.hpp"
#include "uccvqe/pauli.hpp"
#include "uccvqe/statevector.hpp"

namespace uccvqe {

/// Penalized VQE objective: E_VQE = E + p |<S^2>|^2 (or, behind the
/// generalized flag, p (<S^2> - target)^2).
class Objective {
 public:
  Objective(QubitOperator hamiltonian, QubitOperator s2, Statevector reference,
            CompiledCircuit circuit, double penalty = 0.0);

  struct Value {
    double e_vqe = 0;
    double energy = 0;
    double s2 = 0;
  };

  Value evaluate(const Eigen::VectorXd& params) const;
  Statevector state_at(const Eigen::VectorXd& params) const;
  double particle_number(const Eigen::VectorXd& params) const;

  int n_params() const { return circuit_.n_params; }
  int n_qubits() const { return reference_.n_qubits(); }
  double penalty() const { return penalty_; }
  const QubitOperator& hamiltonian() const { return hamiltonian_; }
  const QubitOperator& s2_operator() const { return s2_op_; }
  const Statevector& reference() const { return reference_; }
  const CompiledCircuit& circuit() const { return circuit_; }

  void set_generalized_penalty(double target_s2);

 private:
  QubitOperator hamiltonian_, s2_op_;
  Statevector reference_;
  CompiledCircuit circuit_;
  CompiledObservable h_obs_, s2_obs_;
  double penalty_ = 0;
  bool generalized_ = false;
  double target_s2_ = 0;
};

/// Central finite differences of E_VQE, step 1e-6, one component per
/// worker task.
Eigen::VectorXd fd_gradient(const Objective& objective, const Eigen::VectorXd& params,
                            double step = 1e-6);

struct RestartPolicy {
  int n_restarts = 1;
  double r_f = 1e-2;     // variance of the initial Gaussian amplitudes
  std::uint64_t seed = 0;
};

struct VQEResult {
  double energy = 0;   // bare <H>
  double e_vqe = 0;    // penalized objective at the minimum
  Eigen::VectorXd params;
  double s2 = 0;
  double n_electrons = 0;
  int iterations = 0;
  double grad_inf = 0;
  bool converged = false;
  int winner = -1;                      // restart index of the kept solution
  std::vector<double> restart_evqe;     // NaN marks a failed restart
};

/// Runs n_restarts independent L-BFGS optimizations from Gaussian draws
/// (restart 0 may instead start from warm_start) and keeps the lowest
/// E_VQE. Deterministic for fixed (objective, policy, options, warm).
VQEResult minimize(const Objective& objective, const RestartPolicy& policy,
                   const OptimOptions& options = {},
                   const std::optional<Eigen::VectorXd>& warm_start = std::nullopt,
                   std::ostream* progress = nullptr);

}  // namespace uccvqe
