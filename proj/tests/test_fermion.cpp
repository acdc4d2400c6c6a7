// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "uccvqe/fermion.hpp"

using namespace uccvqe;

TEST_CASE("normal ordering is idempotent and canonical") {
  // a_0 a†_1 = -a†_1 a_0
  FermionOperator op = FermionOperator::term({{0, false}, {1, true}});
  const FermionOperator no = op.normal_ordered();
  CHECK(no.n_terms() == 1);
  const FermionOperator again = no.normal_ordered();
  CHECK((no - again).normal_ordered().empty());

  // a_0 a†_0 = 1 - a†_0 a_0
  const FermionOperator contract =
      FermionOperator::term({{0, false}, {0, true}}).normal_ordered();
  CHECK(contract.n_terms() == 2);
  const Eigen::MatrixXcd lhs = dense_fermion_matrix(FermionOperator::term({{0, false}, {0, true}}), 2);
  const Eigen::MatrixXcd rhs = dense_fermion_matrix(contract, 2);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("operator plus its negation is empty") {
  FermionOperator t = FermionOperator::term({{3, true}, {1, false}}, cplx(0.7, -0.1));
  CHECK((t + (-1.0) * t).empty());
}

TEST_CASE("normal ordering preserves the dense matrix") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> mode(0, 3);
  std::uniform_int_distribution<int> flag(0, 1);
  for (int trial = 0; trial < 25; ++trial) {
    LadderProduct ops;
    const int len = 1 + trial % 4;
    for (int i = 0; i < len; ++i) ops.push_back({mode(rng), flag(rng) == 1});
    const FermionOperator raw = FermionOperator::term(ops, cplx(1.0, 0.3));
    const Eigen::MatrixXcd lhs = dense_fermion_matrix(raw, 4);
    const Eigen::MatrixXcd rhs = dense_fermion_matrix(raw.normal_ordered(), 4);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("anti-hermitian generator") {
  // t = a†_1 a_0 -> a†_1 a_0 - a†_0 a_1
  const FermionOperator t = FermionOperator::term({{1, true}, {0, false}});
  const FermionOperator g = anti_hermitian_generator(t);
  CHECK(g.n_terms() == 2);
  const FermionOperator sum = (g + g.adjoint()).normal_ordered();
  CHECK(sum.empty());

  CHECK(anti_hermitian_generator(FermionOperator{}).empty());
}

TEST_CASE("random two-body generator is anti-hermitian as a matrix") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> mode(0, 5);
  std::uniform_real_distribution<double> coeff(-1, 1);
  for (int trial = 0; trial < 10; ++trial) {
    FermionOperator t;
    for (int term = 0; term < 3; ++term) {
      const int p = mode(rng), q = mode(rng), r = mode(rng), s = mode(rng);
      t.add_term({{p, true}, {q, true}, {s, false}, {r, false}}, coeff(rng));
    }
    const Eigen::MatrixXcd g = dense_fermion_matrix(anti_hermitian_generator(t), 6);
    CHECK((g + g.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("adjoint reverses and conjugates") {
  const FermionOperator t = FermionOperator::term({{2, true}, {0, false}}, cplx(0, 1));
  const Eigen::MatrixXcd m = dense_fermion_matrix(t, 3);
  const Eigen::MatrixXcd md = dense_fermion_matrix(t.adjoint(), 3);
  CHECK((m.adjoint() - md).cwiseAbs().maxCoeff() < 1e-14);
}
