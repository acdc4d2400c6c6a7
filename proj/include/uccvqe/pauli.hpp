// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace uccvqe {

using cplx = std::complex<double>;

/// Coefficients below this magnitude are dropped from operator term maps.
inline constexpr double kCoeffPruneTol = 1e-14;

/// Pauli string over up to 32 qubits, stored as X/Z bit masks.
/// A qubit with both bits set carries Y; with neither, identity.
struct PauliString {
  std::uint32_t x = 0;
  std::uint32_t z = 0;

  bool is_identity() const { return x == 0 && z == 0; }
  int weight() const;
  int highest_qubit() const;  // -1 for the identity string
  char letter(int qubit) const;

  std::uint64_t key() const { return (std::uint64_t(x) << 32) | z; }
  static PauliString from_key(std::uint64_t k) {
    return PauliString{std::uint32_t(k >> 32), std::uint32_t(k & 0xffffffffu)};
  }

  static PauliString single(int qubit, char letter);
  /// Parses "X0Z2Y5" (letters with qubit indices, any order) or "I".
  static PauliString from_string(const std::string& s);
  std::string str() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// lhs * rhs as (phase, string); phase is a power of i.
std::pair<cplx, PauliString> pauli_product(const PauliString& lhs, const PauliString& rhs);

/// Sparse weighted sum of Pauli strings on a fixed-size qubit register.
/// Terms with |coeff| < kCoeffPruneTol are pruned on mutation.
class QubitOperator {
 public:
  QubitOperator() = default;
  explicit QubitOperator(int n_qubits);
  static QubitOperator identity(int n_qubits, cplx coeff = cplx(1.0));

  int n_qubits() const { return n_qubits_; }
  std::size_t n_terms() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add_term(const PauliString& p, cplx coeff);
  cplx coefficient(const PauliString& p) const;
  const std::map<std::uint64_t, cplx>& terms() const { return terms_; }

  QubitOperator& operator+=(const QubitOperator& other);
  QubitOperator& operator-=(const QubitOperator& other);
  QubitOperator& operator*=(cplx scalar);
  QubitOperator adjoint() const;

  /// Every Pauli string is Hermitian, so Hermiticity reduces to a
  /// term-wise check that each coefficient equals its own conjugate.
  bool is_hermitian(double tol = 1e-12) const;
  /// Sum of |coeff| over all terms.
  double l1_norm() const;

  /// One line per term: "coeff_re coeff_im pauli_string".
  std::string to_text() const;
  static QubitOperator from_text(const std::string& text, int n_qubits);

 private:
  int n_qubits_ = 0;
  std::map<std::uint64_t, cplx> terms_;
};

QubitOperator operator+(QubitOperator a, const QubitOperator& b);
QubitOperator operator-(QubitOperator a, const QubitOperator& b);
QubitOperator operator*(QubitOperator a, cplx scalar);
QubitOperator operator*(cplx scalar, QubitOperator a);
QubitOperator operator*(const QubitOperator& a, const QubitOperator& b);
QubitOperator commutator(const QubitOperator& a, const QubitOperator& b);

/// Dense 2^n x 2^n matrix of the operator; intended for small registers.
Eigen::MatrixXcd dense_matrix(const QubitOperator& op);

}  // namespace uccvqe
