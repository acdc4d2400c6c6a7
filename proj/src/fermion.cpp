// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/fermion.hpp"

#include <bit>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace uccvqe {

namespace {

std::vector<int> encode(const LadderProduct& ops) {
  std::vector<int> key;
  key.reserve(ops.size());
  for (const auto& op : ops) {
    if (op.mode < 0 || op.mode >= 32) throw std::invalid_argument("mode out of range");
    key.push_back((op.mode << 1) | (op.create ? 1 : 0));
  }
  return key;
}

}  // namespace

LadderProduct FermionOperator::decode(const std::vector<int>& key) {
  LadderProduct ops;
  ops.reserve(key.size());
  for (int e : key) ops.push_back({e >> 1, (e & 1) != 0});
  return ops;
}

FermionOperator FermionOperator::term(const LadderProduct& ops, cplx coeff) {
  FermionOperator out;
  out.add_term(ops, coeff);
  return out;
}

FermionOperator FermionOperator::term(std::initializer_list<LadderOp> ops, cplx coeff) {
  return term(LadderProduct(ops), coeff);
}

void FermionOperator::add_term(const LadderProduct& ops, cplx coeff) {
  auto key = encode(ops);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (std::abs(coeff) >= kCoeffPruneTol) terms_.emplace(std::move(key), coeff);
    return;
  }
  it->second += coeff;
  if (std::abs(it->second) < kCoeffPruneTol) terms_.erase(it);
}

int FermionOperator::max_mode() const {
  int m = -1;
  for (const auto& [key, c] : terms_)
    for (int e : key) m = std::max(m, e >> 1);
  return m;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
  for (const auto& [key, c] : other.terms_) add_term(decode(key), c);
  return *this;
}

FermionOperator& FermionOperator::operator-=(const FermionOperator& other) {
  for (const auto& [key, c] : other.terms_) add_term(decode(key), -c);
  return *this;
}

FermionOperator& FermionOperator::operator*=(cplx scalar) {
  if (std::abs(scalar) < kCoeffPruneTol) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

FermionOperator FermionOperator::adjoint() const {
  FermionOperator out;
  for (const auto& [key, c] : terms_) {
    LadderProduct ops = decode(key);
    std::reverse(ops.begin(), ops.end());
    for (auto& op : ops) op.create = !op.create;
    out.add_term(ops, std::conj(c));
  }
  return out;
}

FermionOperator FermionOperator::normal_ordered() const {
  FermionOperator out;
  struct Item {
    LadderProduct ops;
    cplx coeff;
  };
  std::deque<Item> work;
  for (const auto& [key, c] : terms_) work.push_back({decode(key), c});

  while (!work.empty()) {
    Item item = std::move(work.front());
    work.pop_front();
    auto& ops = item.ops;
    bool dirty = false;
    for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
      LadderOp& a = ops[i];
      LadderOp& b = ops[i + 1];
      if (!a.create && b.create) {
        // a_p a†_q = δ_pq - a†_q a_p
        if (a.mode == b.mode) {
          LadderProduct contracted(ops.begin(), ops.begin() + i);
          contracted.insert(contracted.end(), ops.begin() + i + 2, ops.end());
          work.push_back({std::move(contracted), item.coeff});
        }
        std::swap(a, b);
        item.coeff = -item.coeff;
        work.push_back(std::move(item));
        dirty = true;
        break;
      }
      if (a.create == b.create) {
        if (a.mode == b.mode) {  // repeated creation/annihilation vanishes
          dirty = true;
          break;
        }
        if (a.mode < b.mode) {  // canonical: descending modes in each group
          std::swap(a, b);
          item.coeff = -item.coeff;
          work.push_back(std::move(item));
          dirty = true;
          break;
        }
      }
    }
    if (!dirty) out.add_term(ops, item.coeff);
  }
  return out;
}

bool FermionOperator::is_hermitian(double tol) const {
  FermionOperator diff = *this - adjoint();
  for (const auto& [key, c] : diff.normal_ordered().terms())
    if (std::abs(c) > tol) return false;
  return true;
}

std::string FermionOperator::str() const {
  std::ostringstream os;
  os.precision(12);
  for (const auto& [key, c] : terms_) {
    os << "(" << c.real();
    if (c.imag() != 0) os << (c.imag() > 0 ? "+" : "") << c.imag() << "i";
    os << ") ";
    if (key.empty()) os << "1";
    for (int e : key) os << (e >> 1) << ((e & 1) ? "^" : "") << " ";
    os << "\n";
  }
  return os.str();
}

FermionOperator operator+(FermionOperator a, const FermionOperator& b) { return a += b; }
FermionOperator operator-(FermionOperator a, const FermionOperator& b) { return a -= b; }
FermionOperator operator*(FermionOperator a, cplx scalar) { return a *= scalar; }
FermionOperator operator*(cplx scalar, FermionOperator a) { return a *= scalar; }

FermionOperator operator*(const FermionOperator& a, const FermionOperator& b) {
  FermionOperator out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      LadderProduct ops = FermionOperator::decode(ka);
      const LadderProduct more = FermionOperator::decode(kb);
      ops.insert(ops.end(), more.begin(), more.end());
      out.add_term(ops, ca * cb);
    }
  return out;
}

FermionOperator anti_hermitian_generator(const FermionOperator& t) {
  return t - t.adjoint();
}

Eigen::MatrixXcd dense_fermion_matrix(const FermionOperator& op, int n_modes) {
  if (n_modes > 14) throw std::invalid_argument("dense_fermion_matrix limited to 14 modes");
  const std::size_t dim = std::size_t(1) << n_modes;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [key, c] : op.terms()) {
    const LadderProduct ops = FermionOperator::decode(key);
    for (std::size_t col = 0; col < dim; ++col) {
      std::uint32_t occ = std::uint32_t(col);
      double sign = 1.0;
      bool dead = false;
      for (auto it = ops.rbegin(); it != ops.rend(); ++it) {  // rightmost acts first
        const std::uint32_t bit = 1u << it->mode;
        const bool occupied = occ & bit;
        if (it->create == occupied) { dead = true; break; }
        if (std::popcount(occ & (bit - 1)) & 1) sign = -sign;
        occ ^= bit;
      }
      if (!dead) m(occ, col) += c * sign;
    }
  }
  return m;
}

}  // namespace uccvqe
