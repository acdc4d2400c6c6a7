// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "uccvqe/pauli.hpp"

using namespace uccvqe;

TEST_CASE("pauli single-letter products") {
  const PauliString x = PauliString::single(0, 'X');
  const PauliString y = PauliString::single(0, 'Y');
  const PauliString z = PauliString::single(0, 'Z');

  auto [pxy, sxy] = pauli_product(x, y);
  CHECK(sxy == z);
  CHECK(pxy == cplx(0, 1));
  auto [pyx, syx] = pauli_product(y, x);
  CHECK(syx == z);
  CHECK(pyx == cplx(0, -1));
  auto [pzz, szz] = pauli_product(z, z);
  CHECK(szz.is_identity());
  CHECK(pzz == cplx(1, 0));
}

TEST_CASE("pauli product matches dense matrices on random strings") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(0, 3);
  const char letters[] = "IXYZ";
  for (int trial = 0; trial < 30; ++trial) {
    PauliString a, b;
    for (int q = 0; q < 3; ++q) {
      const PauliString la = PauliString::single(q, letters[letter(rng)]);
      const PauliString lb = PauliString::single(q, letters[letter(rng)]);
      a.x |= la.x; a.z |= la.z;
      b.x |= lb.x; b.z |= lb.z;
    }
    QubitOperator qa(3), qb(3);
    qa.add_term(a, 1.0);
    qb.add_term(b, 1.0);
    const Eigen::MatrixXcd lhs = dense_matrix(qa) * dense_matrix(qb);
    const Eigen::MatrixXcd rhs = dense_matrix(qa * qb);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("string parse and print round trip") {
  const PauliString p = PauliString::from_string("X0Z2Y5");
  CHECK(p.str() == "X0Z2Y5");
  CHECK(p.letter(0) == 'X');
  CHECK(p.letter(1) == 'I');
  CHECK(p.letter(5) == 'Y');
  CHECK(p.weight() == 3);
  CHECK(PauliString::from_string("I").is_identity());
  CHECK_THROWS(PauliString::from_string("X0X0"));
}

TEST_CASE("operator arithmetic, pruning and hermiticity") {
  QubitOperator a(2);
  a.add_term(PauliString::from_string("X0"), 0.5);
  a.add_term(PauliString::from_string("Z1"), cplx(0, 1));
  CHECK(!a.is_hermitian());
  QubitOperator h = a + a.adjoint();
  CHECK(h.is_hermitian());
  CHECK(h.coefficient(PauliString::from_string("X0")) == cplx(1.0));
  CHECK(h.coefficient(PauliString::from_string("Z1")) == cplx(0.0));

  QubitOperator diff = a - a;
  CHECK(diff.empty());

  QubitOperator tiny(1);
  tiny.add_term(PauliString::from_string("X0"), 1e-15);
  CHECK(tiny.empty());  // below the prune threshold
}

TEST_CASE("text serialization round trip") {
  QubitOperator a(3);
  a.add_term(PauliString::from_string("X0Z2"), cplx(0.25, -1.5));
  a.add_term({}, 0.125);
  const QubitOperator b = QubitOperator::from_text(a.to_text(), 3);
  CHECK(b.n_terms() == a.n_terms());
  for (const auto& [k, c] : a.terms()) CHECK(b.coefficient(PauliString::from_key(k)) == c);
}

TEST_CASE("commutator of commuting and anticommuting strings") {
  QubitOperator x0(2), z1(2), z0(2);
  x0.add_term(PauliString::from_string("X0"), 1.0);
  z1.add_term(PauliString::from_string("Z1"), 1.0);
  z0.add_term(PauliString::from_string("Z0"), 1.0);
  CHECK(commutator(x0, z1).empty());
  const QubitOperator c = commutator(x0, z0);
  CHECK(c.n_terms() == 1);
  CHECK(c.coefficient(PauliString::from_string("Y0")) == cplx(0, -2));
}

TEST_CASE("dense matrix of elementary operators") {
  QubitOperator z0(1);
  z0.add_term(PauliString::from_string("Z0"), 1.0);
  const Eigen::MatrixXcd mz = dense_matrix(z0);
  CHECK(mz(0, 0) == cplx(1));
  CHECK(mz(1, 1) == cplx(-1));

  QubitOperator y0(1);
  y0.add_term(PauliString::from_string("Y0"), 1.0);
  const Eigen::MatrixXcd my = dense_matrix(y0);
  CHECK(my(1, 0) == cplx(0, 1));
  CHECK(my(0, 1) == cplx(0, -1));
}
