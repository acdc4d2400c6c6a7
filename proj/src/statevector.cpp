// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "uccvqe/error.hpp"

namespace uccvqe {

Statevector::Statevector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw ValidationError("statevector register must hold 1.." + std::to_string(kMaxQubits) +
                          " qubits");
  amps_ = Eigen::VectorXcd::Zero(dim());
  amps_[0] = 1.0;
}

Statevector Statevector::basis_state(int n_qubits, std::uint32_t index) {
  Statevector s(n_qubits);
  if (index >= s.dim()) throw ValidationError("basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

void Statevector::apply_x(int qubit) {
  const std::uint32_t bit = 1u << qubit;
  for (std::uint32_t i = 0; i < dim(); ++i)
    if (!(i & bit)) std::swap(amps_[i], amps_[i | bit]);
}

void Statevector::apply_h(int qubit) {
  const std::uint32_t bit = 1u << qubit;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::uint32_t i = 0; i < dim(); ++i)
    if (!(i & bit)) {
      const cplx a0 = amps_[i];
      const cplx a1 = amps_[i | bit];
      amps_[i] = inv_sqrt2 * (a0 + a1);
      amps_[i | bit] = inv_sqrt2 * (a0 - a1);
    }
}

void Statevector::apply_cnot(int control, int target) {
  const std::uint32_t cbit = 1u << control;
  const std::uint32_t tbit = 1u << target;
  for (std::uint32_t i = 0; i < dim(); ++i)
    if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
}

void Statevector::normalize() { amps_ /= amps_.norm(); }

std::string bitstring(std::uint32_t index, int n_qubits) {
  std::string s(n_qubits, '0');
  for (int q = 0; q < n_qubits; ++q)
    if ((index >> q) & 1u) s[q] = '1';
  return s;
}

std::uint32_t parse_bitstring(const std::string& bits) {
  std::uint32_t index = 0;
  for (std::size_t q = 0; q < bits.size(); ++q)
    if (bits[q] == '1') index |= 1u << q;
  return index;
}

cplx overlap(const Statevector& a, const Statevector& b) {
  return a.amplitudes().dot(b.amplitudes());
}

double fidelity(const Statevector& a, const Statevector& b) { return std::abs(overlap(a, b)); }

void apply_pauli_exponential(Statevector& state, const PauliString& p, double theta) {
  if (p.is_identity()) throw ValidationError("pauli exponential needs a non-identity string");
  auto& amps = state.amplitudes();
  const std::uint32_t dim = std::uint32_t(state.dim());
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const int ny = std::popcount(p.x & p.z);
  static const cplx kIPow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  const cplx u = kIPow[ny % 4];  // phi_i = u * sign_i, with sign_i = (-1)^{|i & z|}

  if (p.x == 0) {
    const cplx e_plus = cplx(c, s);
    const cplx e_minus = cplx(c, -s);
    for (std::uint32_t i = 0; i < dim; ++i)
      amps[i] *= (std::popcount(i & p.z) & 1) ? e_minus : e_plus;
    return;
  }

  const cplx w_ij = cplx(0, s) * std::conj(u);  // multiplies a_j into a_i
  const cplx w_ji = cplx(0, s) * u;
  for (std::uint32_t i = 0; i < dim; ++i) {
    const std::uint32_t j = i ^ p.x;
    if (j < i) continue;
    const double sign = (std::popcount(i & p.z) & 1) ? -1.0 : 1.0;
    const cplx ai = amps[i];
    const cplx aj = amps[j];
    amps[i] = c * ai + sign * w_ij * aj;
    amps[j] = c * aj + sign * w_ji * ai;
  }
}

Statevector apply_operator(const QubitOperator& op, const Statevector& state) {
  if (op.n_qubits() > state.n_qubits())
    throw ValidationError("operator register larger than state register");
  Statevector out = state;
  out.amplitudes().setZero();
  const auto& in = state.amplitudes();
  auto& o = out.amplitudes();
  const std::uint32_t dim = std::uint32_t(state.dim());
  static const cplx kIPow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  for (const auto& [key, coeff] : op.terms()) {
    const PauliString p = PauliString::from_key(key);
    const cplx u = kIPow[std::popcount(p.x & p.z) % 4];
    for (std::uint32_t i = 0; i < dim; ++i) {
      const double sign = (std::popcount(i & p.z) & 1) ? -1.0 : 1.0;
      o[i ^ p.x] += coeff * u * sign * in[i];
    }
  }
  return out;
}

double expectation(const Statevector& state, const QubitOperator& op) {
  if (!op.is_hermitian())
    throw ValidationError("expectation value requested for a non-Hermitian operator");
  const auto& amps = state.amplitudes();
  const std::uint32_t dim = std::uint32_t(state.dim());
  static const cplx kIPow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  cplx acc = 0;
  for (const auto& [key, coeff] : op.terms()) {
    const PauliString p = PauliString::from_key(key);
    const cplx u = kIPow[std::popcount(p.x & p.z) % 4];
    cplx term = 0;
    for (std::uint32_t i = 0; i < dim; ++i) {
      const double sign = (std::popcount(i & p.z) & 1) ? -1.0 : 1.0;
      term += std::conj(amps[i ^ p.x]) * sign * amps[i];
    }
    acc += coeff * u * term;
  }
  if (std::abs(acc.imag()) > 1e-10)
    throw ValidationError("expectation value has imaginary residue " +
                          std::to_string(acc.imag()));
  return acc.real();
}

std::vector<std::pair<std::string, cplx>> dominant_determinants(const Statevector& state,
                                                                double cutoff) {
  if (!(cutoff > 0.0) || !(cutoff < 1.0))
    throw ValidationError("dominant-determinant cutoff must lie in (0, 1)");
  std::vector<std::pair<std::uint32_t, cplx>> hits;
  const auto& amps = state.amplitudes();
  for (std::uint32_t i = 0; i < state.dim(); ++i)
    if (std::norm(amps[i]) >= cutoff) hits.emplace_back(i, amps[i]);
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
    if (std::norm(a.second) != std::norm(b.second)) return std::norm(a.second) > std::norm(b.second);
    return a.first < b.first;
  });
  std::vector<std::pair<std::string, cplx>> out;
  out.reserve(hits.size());
  for (const auto& [idx, amp] : hits) out.emplace_back(bitstring(idx, state.n_qubits()), amp);
  return out;
}

std::string dump_amplitudes(const Statevector& state, double threshold) {
  std::ostringstream os;
  os.precision(17);
  const auto& amps = state.amplitudes();
  for (std::uint32_t i = 0; i < state.dim(); ++i)
    if (std::abs(amps[i]) > threshold)
      os << bitstring(i, state.n_qubits()) << " " << amps[i].real() << " " << amps[i].imag()
         << "\n";
  return os.str();
}

}  // namespace uccvqe
