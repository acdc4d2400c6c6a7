// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <functional>

namespace uccvqe {

struct OptimOptions {
  double grad_tol = 1e-7;    // infinity norm of the gradient
  double energy_tol = 1e-10; // |df| threshold, three consecutive hits
  int max_iterations = 500;
  int history = 10;
  double wolfe_c1 = 1e-4;
  double wolfe_c2 = 0.9;
  int max_line_search = 50;
};

struct OptimResult {
  Eigen::VectorXd x;
  double f = 0;
  Eigen::VectorXd gradient;
  int iterations = 0;
  bool converged = false;
};

using ObjectiveFn = std::function<double(const Eigen::VectorXd&)>;
using GradientFn = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;
/// callback(iteration, x, f, grad_inf_norm)
using IterationCallback =
    std::function<void(int, const Eigen::VectorXd&, double, double)>;

/// Limited-memory BFGS (two-loop recursion) with a strong-Wolfe line
/// search; a failed line search falls back to one steepest-descent
/// backtracking step before re-entering the quasi-Newton loop.
/// Accepted steps never increase f.
OptimResult lbfgs_minimize(const ObjectiveFn& f, const GradientFn& grad, Eigen::VectorXd x0,
                           const OptimOptions& options = {},
                           const IterationCallback& callback = {});

}  // namespace uccvqe
