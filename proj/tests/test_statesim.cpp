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

// |amplitude| at a ket given as a left-to-right qubit bitstring.
cplx amp_at(const Statevector& s, const std::string& bits) {
  return s.amplitudes()[parse_bitstring(bits)];
}

}  // namespace

TEST_CASE("single-determinant registers reproduce the printed kets") {
  struct Case {
    RegisterLabel label;
    int n_elec;
    int n_qubits;
    std::string ket;
  };
  const Case cases[] = {
      {RegisterLabel::S1, 2, 8, "11000000"},       // H2-sized singlet
      {RegisterLabel::T, 2, 8, "10100000"},        // H2-sized triplet
      {RegisterLabel::D, 3, 12, "111000000000"},   // H3-sized doublet
      {RegisterLabel::Q, 3, 12, "101010000000"},   // H3-sized quadruplet
      {RegisterLabel::T, 6, 12, "111110100000"},   // CH2-sized triplet
      {RegisterLabel::S1, 6, 12, "111111000000"},  // CH2-sized closed-shell singlet
      {RegisterLabel::S1, 6, 10, "1111110000"},    // NH-sized closed-shell singlet
      {RegisterLabel::T, 4, 8, "11101000"},        // H4-sized triplet
      {RegisterLabel::S1, 4, 8, "11110000"},       // H4-sized singlet
  };
  for (const auto& c : cases) {
    const Statevector s = prepare_register(c.label, c.n_elec, c.n_qubits);
    CHECK(std::abs(amp_at(s, c.ket) - cplx(1.0)) < 1e-14);
    double n = 0;
    for (std::uint32_t i = 0; i < s.dim(); ++i)
      n += std::norm(s.amplitudes()[i]) * double(std::popcount(i));
    CHECK(n == doctest::Approx(double(c.n_elec)).epsilon(1e-12));
  }
}

TEST_CASE("multireference circuits produce the printed superpositions") {
  // S2 on a 4-qubit block: (|1100> - |0011>)/sqrt(2)
  const Statevector s2 = prepare_register(RegisterLabel::S2, 2, 4);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(amp_at(s2, "1100") - cplx(r)) < 1e-14);
  CHECK(std::abs(amp_at(s2, "0011") - cplx(-r)) < 1e-14);

  // S3 on a 4-qubit block: (|0110> - |1001>)/sqrt(2)
  const Statevector s3 = prepare_register(RegisterLabel::S3, 2, 4);
  CHECK(std::abs(amp_at(s3, "0110") - cplx(r)) < 1e-14);
  CHECK(std::abs(amp_at(s3, "1001") - cplx(-r)) < 1e-14);

  // CH2-sized registers embed the block after the doubly occupied core.
  const Statevector s2b = prepare_register(RegisterLabel::S2, 6, 12);
  CHECK(std::abs(amp_at(s2b, "111111000000") - cplx(r)) < 1e-14);
  CHECK(std::abs(amp_at(s2b, "111100110000") - cplx(-r)) < 1e-14);
  const Statevector s3b = prepare_register(RegisterLabel::S3, 6, 12);
  CHECK(std::abs(amp_at(s3b, "111101100000") - cplx(r)) < 1e-14);
  CHECK(std::abs(amp_at(s3b, "111110010000") - cplx(-r)) < 1e-14);

  // NH-sized: 10 qubits, 6 electrons.
  const Statevector s2n = prepare_register(RegisterLabel::S2, 6, 10);
  CHECK(std::abs(amp_at(s2n, "1111110000") - cplx(r)) < 1e-14);
  CHECK(std::abs(amp_at(s2n, "1111001100") - cplx(-r)) < 1e-14);
  const Statevector s3n = prepare_register(RegisterLabel::S3, 6, 10);
  CHECK(std::abs(amp_at(s3n, "1111011000") - cplx(r)) < 1e-14);
  CHECK(std::abs(amp_at(s3n, "1111100100") - cplx(-r)) < 1e-14);

  // H4-sized: 8 qubits, 4 electrons.
  const Statevector s2h = prepare_register(RegisterLabel::S2, 4, 8);
  CHECK(std::abs(amp_at(s2h, "11110000") - cplx(r)) < 1e-14);
  CHECK(std::abs(amp_at(s2h, "11001100") - cplx(-r)) < 1e-14);
}

TEST_CASE("register errors") {
  CHECK_THROWS(prepare_register(RegisterLabel::S1, 3, 8));  // odd electrons
  CHECK_THROWS(prepare_register(RegisterLabel::T, 8, 8));   // does not fit
  CHECK_THROWS(parse_register_label("S9"));
}

TEST_CASE("pauli exponential basics") {
  Statevector psi = Statevector::basis_state(1, 0);
  apply_pauli_exponential(psi, PauliString::from_string("X0"), 0.0);
  CHECK(std::abs(psi.amplitudes()[0] - cplx(1.0)) < 1e-15);

  apply_pauli_exponential(psi, PauliString::from_string("X0"), M_PI / 2);
  CHECK(std::abs(psi.amplitudes()[1] - cplx(0, 1)) < 1e-14);

  CHECK_THROWS(apply_pauli_exponential(psi, PauliString{}, 0.1));
}

TEST_CASE("pauli exponential matches the dense matrix exponential") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_real_distribution<double> angle(-2, 2);
  std::normal_distribution<double> comp(0, 1);
  const char letters[] = "IXYZ";
  for (int trial = 0; trial < 20; ++trial) {
    PauliString p;
    while (p.is_identity())
      for (int q = 0; q < 4; ++q) {
        const PauliString l = PauliString::single(q, letters[letter(rng)]);
        p.x |= l.x;
        p.z |= l.z;
      }
    Statevector psi(4);
    for (auto& a : psi.amplitudes().reshaped()) a = cplx(comp(rng), comp(rng));
    psi.normalize();

    const double theta = angle(rng);
    Statevector fast = psi;
    apply_pauli_exponential(fast, p, theta);

    QubitOperator op(4);
    op.add_term(p, 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense_matrix(op));
    const Eigen::MatrixXcd expm =
        es.eigenvectors() *
        (cplx(0, theta) * es.eigenvalues().array()).exp().matrix().asDiagonal() *
        es.eigenvectors().adjoint();
    const Eigen::VectorXcd slow = expm * psi.amplitudes();
    CHECK((slow - fast.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(fast.norm() - 1.0) < 1e-13);

    apply_pauli_exponential(fast, p, -theta);
    CHECK((fast.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("norm is preserved across long random gate sequences") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> qubit(0, 5);
  std::uniform_int_distribution<int> kind(0, 2);
  Statevector psi = prepare_register(RegisterLabel::S1, 4, 6);
  for (int g = 0; g < 10000; ++g) {
    const int q = qubit(rng);
    switch (kind(rng)) {
      case 0: psi.apply_x(q); break;
      case 1: psi.apply_h(q); break;
      default: {
        int t = qubit(rng);
        if (t == q) t = (t + 1) % 6;
        psi.apply_cnot(q, t);
      }
    }
  }
  CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
}

TEST_CASE("expectation basics and errors") {
  const Statevector ones = Statevector::basis_state(3, parse_bitstring("111"));
  CHECK(expectation(ones, QubitOperator::identity(3)) == doctest::Approx(1.0));
  QubitOperator z0(3);
  z0.add_term(PauliString::from_string("Z0"), 1.0);
  CHECK(expectation(ones, z0) == doctest::Approx(-1.0));

  QubitOperator bad(3);
  bad.add_term(PauliString::from_string("X0"), cplx(0, 1));
  CHECK_THROWS(expectation(ones, bad));
}

TEST_CASE("dominant determinants") {
  const Statevector basis = Statevector::basis_state(4, parse_bitstring("1100"));
  const auto single = dominant_determinants(basis, 0.01);
  REQUIRE(single.size() == 1);
  CHECK(single[0].first == "1100");
  CHECK(std::abs(single[0].second - cplx(1.0)) < 1e-14);

  const Statevector s2 = prepare_register(RegisterLabel::S2, 2, 4);
  const auto two = dominant_determinants(s2, 0.1);
  REQUIRE(two.size() == 2);
  CHECK(std::norm(two[0].second) == doctest::Approx(0.5));
  CHECK(std::norm(two[1].second) == doctest::Approx(0.5));

  CHECK_THROWS(dominant_determinants(s2, 0.0));
}

TEST_CASE("amplitude dump lists only significant entries") {
  const Statevector s2 = prepare_register(RegisterLabel::S2, 2, 4);
  const std::string dump = dump_amplitudes(s2);
  CHECK(dump.find("1100") != std::string::npos);
  CHECK(dump.find("0011") != std::string::npos);
  CHECK(std::count(dump.begin(), dump.end(), '\n') == 2);
}
