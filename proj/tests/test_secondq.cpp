// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "uccvqe/registers.hpp"
#include "uccvqe/second_quantization.hpp"
#include "uccvqe/statevector.hpp"

using namespace uccvqe;

namespace {

MOIntegrals random_mo(int n_orb, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  MOIntegrals mo;
  mo.n_orb = n_orb;
  mo.e_nuc = u(rng);
  mo.h = Eigen::MatrixXd::Zero(n_orb, n_orb);
  for (int p = 0; p < n_orb; ++p)
    for (int q = 0; q <= p; ++q) mo.h(p, q) = mo.h(q, p) = u(rng);
  mo.g = FourIndexTensor(n_orb);
  for (int p = 0; p < n_orb; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= (r == p ? q : r); ++s) mo.g.set_symmetric(p, q, r, s, 0.2 * u(rng));
  return mo;
}

}  // namespace

TEST_CASE("jordan-wigner of a single creation operator") {
  const QubitOperator q = jordan_wigner(FermionOperator::term({{0, true}}), 2);
  CHECK(q.n_terms() == 2);
  CHECK(q.coefficient(PauliString::from_string("X0")) == cplx(0.5, 0));
  CHECK(q.coefficient(PauliString::from_string("Y0")) == cplx(0, -0.5));
}

TEST_CASE("jordan-wigner matches the occupation-basis matrix") {
  // a†_2 a_0 on 4 qubits, checked as a 16x16 matrix identity.
  const FermionOperator t = FermionOperator::term({{2, true}, {0, false}});
  const Eigen::MatrixXcd lhs = dense_matrix(jordan_wigner(t, 4));
  const Eigen::MatrixXcd rhs = dense_fermion_matrix(t, 4);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("jordan-wigner is an algebra homomorphism") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> mode(0, 4);
  for (int trial = 0; trial < 15; ++trial) {
    FermionOperator a = FermionOperator::term({{mode(rng), true}, {mode(rng), false}}, 0.8);
    FermionOperator b =
        FermionOperator::term({{mode(rng), true}, {mode(rng), false}}, cplx(0.3, 0.4));
    const QubitOperator qa = jordan_wigner(a, 5);
    const QubitOperator qb = jordan_wigner(b, 5);
    const QubitOperator qab = jordan_wigner(a * b, 5);
    const Eigen::MatrixXcd lhs = dense_matrix(qa) * dense_matrix(qb);
    const Eigen::MatrixXcd rhs = dense_matrix(qab);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("anticommutators encode to delta") {
  const int n = 4;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const FermionOperator ap = FermionOperator::term({{p, false}});
      const FermionOperator adq = FermionOperator::term({{q, true}});
      const QubitOperator anti =
          jordan_wigner(ap * adq + adq * ap, n);
      if (p == q) {
        CHECK(anti.n_terms() == 1);
        CHECK(std::abs(anti.coefficient(PauliString{}) - cplx(1.0)) < 1e-14);
      } else {
        CHECK(anti.empty());
      }
    }
}

TEST_CASE("number operator encodes to (I - Z)/2 sums") {
  const QubitOperator n = jordan_wigner(number_operator(3), 6);  // 3 spatial orbitals
  CHECK(std::abs(n.coefficient(PauliString{}) - cplx(3.0)) < 1e-14);
  for (int q = 0; q < 6; ++q)
    CHECK(std::abs(n.coefficient(PauliString::single(q, 'Z')) - cplx(-0.5)) < 1e-14);
}

TEST_CASE("one-orbital hamiltonian expansion") {
  MOIntegrals mo;
  mo.n_orb = 1;
  mo.e_nuc = 0;
  mo.h = Eigen::MatrixXd::Constant(1, 1, -1.0);
  mo.g = FourIndexTensor(1);
  const FermionOperator h = hamiltonian_operator(mo);
  FermionOperator expected;
  expected.add_term({{0, true}, {0, false}}, -1.0);
  expected.add_term({{1, true}, {1, false}}, -1.0);
  CHECK((h - expected).normal_ordered().empty());
}

TEST_CASE("scalar-only hamiltonian") {
  MOIntegrals mo;
  mo.n_orb = 2;
  mo.e_nuc = 0.5;
  mo.h = Eigen::MatrixXd::Zero(2, 2);
  mo.g = FourIndexTensor(2);
  const QubitOperator h = jordan_wigner(hamiltonian_operator(mo), 4);
  CHECK(h.n_terms() == 1);
  CHECK(std::abs(h.coefficient(PauliString{}) - cplx(0.5)) < 1e-14);
}

TEST_CASE("hamiltonian is hermitian and commutes with N and Sz") {
  const MOIntegrals mo = random_mo(3, 42);
  const int n_qubits = 6;
  const QubitOperator h = jordan_wigner(hamiltonian_operator(mo), n_qubits);
  CHECK(h.is_hermitian());
  const QubitOperator n = jordan_wigner(number_operator(3), n_qubits);
  const QubitOperator sz = jordan_wigner(sz_operator(3), n_qubits);
  CHECK(commutator(h, n).l1_norm() < 1e-10);
  CHECK(commutator(h, sz).l1_norm() < 1e-10);
}

TEST_CASE("hamiltonian term count stays at its regression value") {
  // O(n^4) scaling guard at fixed inputs.
  const MOIntegrals mo2 = random_mo(2, 1);
  const MOIntegrals mo3 = random_mo(3, 2);
  const QubitOperator h2 = jordan_wigner(hamiltonian_operator(mo2), 4);
  const QubitOperator h3 = jordan_wigner(hamiltonian_operator(mo3), 6);
  CHECK(h2.n_terms() == 27);
  CHECK(h3.n_terms() == 119);
}

TEST_CASE("spin operator expectations on registers") {
  const QubitOperator s2_2 = jordan_wigner(s2_operator(2), 4);
  const Statevector closed = Statevector::basis_state(4, parse_bitstring("1100"));
  CHECK(expectation(closed, s2_2) == doctest::Approx(0.0).epsilon(1e-12));

  // CH2-sized register: T on 12 qubits has <S^2> = 2.
  const QubitOperator s2_6 = jordan_wigner(s2_operator(6), 12);
  const Statevector t = prepare_register(RegisterLabel::T, 6, 12);
  CHECK(expectation(t, s2_6) == doctest::Approx(2.0).epsilon(1e-12));

  // S3 circuit on 4 qubits: open-shell singlet, <S^2> = <Sz> = 0.
  const QubitOperator s2 = jordan_wigner(s2_operator(2), 4);
  const QubitOperator sz = jordan_wigner(sz_operator(2), 4);
  const Statevector s3 = prepare_register(RegisterLabel::S3, 2, 4);
  CHECK(expectation(s3, s2) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(expectation(s3, sz) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("s2 eigenvalues on determinant states") {
  // Spot checks in a 2-orbital register: the aa triplet has S^2 = 2.
  const QubitOperator s2 = jordan_wigner(s2_operator(2), 4);
  const Statevector t_up = Statevector::basis_state(4, parse_bitstring("1010"));
  CHECK(expectation(t_up, s2) == doctest::Approx(2.0).epsilon(1e-12));
  const Statevector single = Statevector::basis_state(4, parse_bitstring("1000"));
  CHECK(expectation(single, s2) == doctest::Approx(0.75).epsilon(1e-12));
}
