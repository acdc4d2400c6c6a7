// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

namespace uccvqe {

/// Dense rank-4 tensor over a single orbital dimension, chemists'
/// index order (pq|rs).
class FourIndexTensor {
 public:
  FourIndexTensor() = default;
  explicit FourIndexTensor(int n) : n_(n), data_(Eigen::VectorXd::Zero(std::size_t(n) * n * n * n)) {}

  int dim() const { return n_; }

  double& operator()(int p, int q, int r, int s) { return data_[index(p, q, r, s)]; }
  double operator()(int p, int q, int r, int s) const { return data_[index(p, q, r, s)]; }

  /// Writes v into all eight chemists'-symmetry images of (p,q,r,s).
  void set_symmetric(int p, int q, int r, int s, double v);

  /// Largest violation of the 8-fold permutation symmetry.
  double symmetry_defect() const;

  const Eigen::VectorXd& data() const { return data_; }
  Eigen::VectorXd& data() { return data_; }

 private:
  std::size_t index(int p, int q, int r, int s) const {
    return ((std::size_t(p) * n_ + q) * n_ + r) * n_ + s;
  }
  int n_ = 0;
  Eigen::VectorXd data_;
};

}  // namespace uccvqe
