// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "uccvqe/pauli.hpp"

namespace uccvqe {

/// One ladder operator acting on a spin-orbital mode.
struct LadderOp {
  int mode = 0;
  bool create = false;
  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

using LadderProduct = std::vector<LadderOp>;

/// Weighted sum of ladder-operator products. Products are stored as written
/// (leftmost factor applied last); arithmetic merges identical products.
class FermionOperator {
 public:
  FermionOperator() = default;

  static FermionOperator term(const LadderProduct& ops, cplx coeff = cplx(1.0));
  /// Convenience: {{mode, create}, ...}.
  static FermionOperator term(std::initializer_list<LadderOp> ops, cplx coeff = cplx(1.0));

  void add_term(const LadderProduct& ops, cplx coeff);
  bool empty() const { return terms_.empty(); }
  std::size_t n_terms() const { return terms_.size(); }
  int max_mode() const;  // -1 when empty or identity-only

  FermionOperator& operator+=(const FermionOperator& other);
  FermionOperator& operator-=(const FermionOperator& other);
  FermionOperator& operator*=(cplx scalar);
  FermionOperator adjoint() const;

  /// Wick reordering to the canonical form: creation operators first,
  /// both groups sorted by descending mode; contraction terms from
  /// {a_p, a†_p} = 1 are kept. Idempotent.
  FermionOperator normal_ordered() const;

  /// normal_ordered(*this - adjoint()) has no surviving terms.
  bool is_hermitian(double tol = 1e-12) const;

  std::string str() const;

  /// Deterministic iteration (keys ordered by encoded ladder product).
  const std::map<std::vector<int>, cplx>& terms() const { return terms_; }

  static LadderProduct decode(const std::vector<int>& key);

 private:
  // key element = (mode << 1) | create
  std::map<std::vector<int>, cplx> terms_;
};

FermionOperator operator+(FermionOperator a, const FermionOperator& b);
FermionOperator operator-(FermionOperator a, const FermionOperator& b);
FermionOperator operator*(FermionOperator a, cplx scalar);
FermionOperator operator*(cplx scalar, FermionOperator a);
FermionOperator operator*(const FermionOperator& a, const FermionOperator& b);

/// t - t†, the exponent building block of every unitary cluster factor.
FermionOperator anti_hermitian_generator(const FermionOperator& t);

/// Dense matrix in the 2^n occupation basis (basis index bit p = mode p
/// occupation; creation ordering ascending in mode). Test-grade helper.
Eigen::MatrixXcd dense_fermion_matrix(const FermionOperator& op, int n_modes);

}  // namespace uccvqe
