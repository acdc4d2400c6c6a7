// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/vqe.hpp"

#include <bit>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>

#include "uccvqe/error.hpp"
#include "uccvqe/parallel.hpp"

namespace uccvqe {

Objective::Objective(QubitOperator hamiltonian, QubitOperator s2, Statevector reference,
                     CompiledCircuit circuit, double penalty)
    : hamiltonian_(std::move(hamiltonian)),
      s2_op_(std::move(s2)),
      reference_(std::move(reference)),
      circuit_(std::move(circuit)),
      h_obs_(hamiltonian_, reference_.n_qubits()),
      s2_obs_(s2_op_, reference_.n_qubits()),
      penalty_(penalty) {
  if (penalty_ < 0) throw ValidationError("penalty factor must be non-negative");
  if (circuit_.n_qubits != reference_.n_qubits())
    throw ValidationError("circuit register does not match reference register");
}

void Objective::set_generalized_penalty(double target_s2) {
  generalized_ = true;
  target_s2_ = target_s2;
}

Statevector Objective::state_at(const Eigen::VectorXd& params) const {
  Statevector state = reference_;
  circuit_.apply(state, params);
  return state;
}

Objective::Value Objective::evaluate(const Eigen::VectorXd& params) const {
  const Statevector state = state_at(params);
  Value v;
  v.energy = h_obs_.expectation(state);
  v.s2 = s2_obs_.expectation(state);
  if (penalty_ == 0.0) {
    v.e_vqe = v.energy;  // bit-equal by construction
  } else if (generalized_) {
    const double d = v.s2 - target_s2_;
    v.e_vqe = v.energy + penalty_ * d * d;
  } else {
    v.e_vqe = v.energy + penalty_ * std::abs(v.s2) * std::abs(v.s2);
  }
  return v;
}

double Objective::particle_number(const Eigen::VectorXd& params) const {
  const Statevector state = state_at(params);
  double n = 0;
  const auto& amps = state.amplitudes();
  for (std::uint32_t i = 0; i < state.dim(); ++i)
    n += std::norm(amps[i]) * std::popcount(i);
  return n;
}

Eigen::VectorXd fd_gradient(const Objective& objective, const Eigen::VectorXd& params,
                            double step) {
  Eigen::VectorXd g(params.size());
  parallel_for(std::size_t(params.size()), [&](std::size_t i) {
    Eigen::VectorXd p = params;
    p[i] = params[i] + step;
    const double fp = objective.evaluate(p).e_vqe;
    p[i] = params[i] - step;
    const double fm = objective.evaluate(p).e_vqe;
    g[i] = (fp - fm) / (2.0 * step);
  });
  return g;
}

VQEResult minimize(const Objective& objective, const RestartPolicy& policy,
                   const OptimOptions& options, const std::optional<Eigen::VectorXd>& warm_start,
                   std::ostream* progress) {
  if (policy.n_restarts < 1) throw ValidationError("n_restarts must be >= 1");
  if (!(policy.r_f > 0)) throw ValidationError("r_f must be positive");
  if (warm_start && warm_start->size() != objective.n_params())
    throw ValidationError("warm start length does not match parameter count");

  const ObjectiveFn f = [&](const Eigen::VectorXd& x) { return objective.evaluate(x).e_vqe; };
  const GradientFn grad = [&](const Eigen::VectorXd& x) { return fd_gradient(objective, x); };

  struct Attempt {
    bool ok = false;
    OptimResult result;
  };
  std::vector<Attempt> attempts(policy.n_restarts);

  for (int r = 0; r < policy.n_restarts; ++r) {
    Eigen::VectorXd x0(objective.n_params());
    if (r == 0 && warm_start) {
      x0 = *warm_start;
    } else {
      std::mt19937_64 rng(policy.seed + 0x9e3779b97f4a7c15ULL * std::uint64_t(r + 1));
      std::normal_distribution<double> gauss(0.0, std::sqrt(policy.r_f));
      for (int i = 0; i < x0.size(); ++i) x0[i] = gauss(rng);
    }
    IterationCallback cb;
    if (progress) {
      cb = [&, r](int iter, const Eigen::VectorXd& x, double fx, double ginf) {
        const auto v = objective.evaluate(x);
        (*progress) << "restart " << std::setw(3) << r << " iter " << std::setw(4) << iter
                    << " " << std::setw(20) << std::fixed << std::setprecision(12) << fx << " "
                    << std::setw(20) << v.energy << " " << std::setw(12)
                    << std::setprecision(6) << v.s2 << " " << std::scientific
                    << std::setprecision(3) << ginf << std::defaultfloat << "\n";
      };
    }
    try {
      attempts[r].result = lbfgs_minimize(f, grad, x0, options, cb);
      attempts[r].ok = std::isfinite(attempts[r].result.f);
    } catch (const std::exception&) {
      attempts[r].ok = false;
    }
  }

  VQEResult out;
  out.restart_evqe.assign(policy.n_restarts, std::numeric_limits<double>::quiet_NaN());
  for (int r = 0; r < policy.n_restarts; ++r) {
    if (!attempts[r].ok) continue;
    out.restart_evqe[r] = attempts[r].result.f;
    if (out.winner < 0 || attempts[r].result.f < out.restart_evqe[out.winner])
      out.winner = r;
  }
  if (out.winner < 0) throw OptimizationError("every restart failed");

  const OptimResult& best = attempts[out.winner].result;
  const auto v = objective.evaluate(best.x);
  out.e_vqe = v.e_vqe;
  out.energy = v.energy;
  out.s2 = v.s2;
  out.params = best.x;
  out.n_electrons = objective.particle_number(best.x);
  out.iterations = best.iterations;
  out.grad_inf = best.gradient.size() ? best.gradient.cwiseAbs().maxCoeff() : 0.0;
  out.converged = best.converged;
  return out;
}

}  // namespace uccvqe
