// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/compiled_observable.hpp"

#include <bit>
#include <map>

#include "uccvqe/error.hpp"

namespace uccvqe {

namespace {
constexpr std::size_t kTableMemoryCap = std::size_t(400) << 20;  // bytes
}

CompiledObservable::CompiledObservable(const QubitOperator& op, int n_qubits)
    : n_qubits_(n_qubits) {
  if (!op.is_hermitian()) throw ValidationError("compiled observable requires a Hermitian operator");
  if (op.n_qubits() > n_qubits) throw ValidationError("operator register exceeds state register");

  std::map<std::uint32_t, std::vector<PauliString>> by_flip;
  for (const auto& [key, c] : op.terms()) by_flip[PauliString::from_key(key).x].push_back(PauliString::from_key(key));

  const std::size_t dim = std::size_t(1) << n_qubits;
  const std::size_t bytes = by_flip.size() * dim * sizeof(cplx);
  if (bytes > kTableMemoryCap) {
    tabulated_ = false;
    fallback_ = op;
    return;
  }

  static const cplx kIPow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  groups_.reserve(by_flip.size());
  for (auto& [flip, strings] : by_flip) {
    Group g;
    g.flip = flip;
    g.column = Eigen::VectorXcd::Zero(dim);
    for (const auto& p : strings) {
      const cplx w = op.coefficient(p) * kIPow[std::popcount(p.x & p.z) % 4];
      for (std::uint32_t i = 0; i < dim; ++i)
        g.column[i] += (std::popcount(i & p.z) & 1) ? -w : w;
    }
    groups_.push_back(std::move(g));
  }
  tabulated_ = true;
}

Eigen::VectorXcd CompiledObservable::apply(const Eigen::VectorXcd& amps) const {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(amps.size());
  if (!tabulated_) {
    Statevector tmp(n_qubits_);
    tmp.amplitudes() = amps;
    return apply_operator(fallback_, tmp).amplitudes();
  }
  const std::uint32_t dim = std::uint32_t(amps.size());
  for (const auto& g : groups_) {
    const cplx* col = g.column.data();
    const cplx* in = amps.data();
    cplx* o = out.data();
    const std::uint32_t flip = g.flip;
    for (std::uint32_t i = 0; i < dim; ++i) o[i ^ flip] += col[i] * in[i];
  }
  return out;
}

double CompiledObservable::expectation(const Statevector& state) const {
  if (!tabulated_) return uccvqe::expectation(state, fallback_);
  const auto& amps = state.amplitudes();
  const std::uint32_t dim = std::uint32_t(amps.size());
  cplx acc = 0;
  for (const auto& g : groups_) {
    const cplx* col = g.column.data();
    const cplx* in = amps.data();
    const std::uint32_t flip = g.flip;
    cplx sub = 0;
    for (std::uint32_t i = 0; i < dim; ++i) sub += std::conj(in[i ^ flip]) * col[i] * in[i];
    acc += sub;
  }
  if (std::abs(acc.imag()) > 1e-10)
    throw ValidationError("expectation value has imaginary residue");
  return acc.real();
}

}  // namespace uccvqe
