// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/pauli.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace uccvqe {

int PauliString::weight() const { return std::popcount(x | z); }

int PauliString::highest_qubit() const {
  std::uint32_t m = x | z;
  return m == 0 ? -1 : 31 - std::countl_zero(m);
}

char PauliString::letter(int qubit) const {
  const bool bx = (x >> qubit) & 1u;
  const bool bz = (z >> qubit) & 1u;
  if (bx && bz) return 'Y';
  if (bx) return 'X';
  if (bz) return 'Z';
  return 'I';
}

PauliString PauliString::single(int qubit, char letter) {
  if (qubit < 0 || qubit >= 32) throw std::invalid_argument("pauli qubit out of range");
  const std::uint32_t bit = 1u << qubit;
  switch (letter) {
    case 'I': return {};
    case 'X': return {bit, 0};
    case 'Y': return {bit, bit};
    case 'Z': return {0, bit};
    default: throw std::invalid_argument(std::string("unknown pauli letter: ") + letter);
  }
}

PauliString PauliString::from_string(const std::string& s) {
  if (s == "I" || s.empty()) return {};
  PauliString out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) { ++i; continue; }
    const char letter = s[i++];
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("pauli string missing qubit index: " + s);
    const int qubit = std::stoi(s.substr(i, j - i));
    const PauliString p = single(qubit, letter);
    if ((out.x | out.z) & (p.x | p.z))
      throw std::invalid_argument("duplicate qubit in pauli string: " + s);
    out.x |= p.x;
    out.z |= p.z;
    i = j;
  }
  return out;
}

std::string PauliString::str() const {
  if (is_identity()) return "I";
  std::string out;
  for (int q = 0; q <= highest_qubit(); ++q) {
    const char l = letter(q);
    if (l == 'I') continue;
    out += l;
    out += std::to_string(q);
  }
  return out;
}

std::pair<cplx, PauliString> pauli_product(const PauliString& lhs, const PauliString& rhs) {
  // Phase bookkeeping per qubit: XZ = -iY, ZX = iY, XY = iZ, ... Using the
  // symplectic form, the power of i is weight(lhs.Y)+weight(rhs.Y)-weight(out.Y)
  // adjusted by the anticommutation sign lhs.x & rhs.z.
  const PauliString out{lhs.x ^ rhs.x, lhs.z ^ rhs.z};
  const int y_l = std::popcount(lhs.x & lhs.z);
  const int y_r = std::popcount(rhs.x & rhs.z);
  const int y_o = std::popcount(out.x & out.z);
  // i^(y_l + y_r - y_o) gives the phase of (X^a Z^b)(X^c Z^d) products after
  // pulling each local Y = iXZ apart; commuting rhs.x past lhs.z then
  // contributes (-1)^{|lhs.z & rhs.x|}.
  int ipow = (y_l + y_r - y_o) % 4;
  if (std::popcount(lhs.z & rhs.x) & 1) ipow += 2;
  ipow = ((ipow % 4) + 4) % 4;
  static const cplx kIPow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
  return {kIPow[ipow], out};
}

QubitOperator::QubitOperator(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > 32) throw std::invalid_argument("n_qubits out of range");
}

QubitOperator QubitOperator::identity(int n_qubits, cplx coeff) {
  QubitOperator op(n_qubits);
  op.add_term({}, coeff);
  return op;
}

void QubitOperator::add_term(const PauliString& p, cplx coeff) {
  if (p.highest_qubit() >= n_qubits_)
    throw std::out_of_range("pauli string exceeds register size");
  auto it = terms_.find(p.key());
  if (it == terms_.end()) {
    if (std::abs(coeff) >= kCoeffPruneTol) terms_.emplace(p.key(), coeff);
    return;
  }
  it->second += coeff;
  if (std::abs(it->second) < kCoeffPruneTol) terms_.erase(it);
}

cplx QubitOperator::coefficient(const PauliString& p) const {
  auto it = terms_.find(p.key());
  return it == terms_.end() ? cplx(0.0) : it->second;
}

QubitOperator& QubitOperator::operator+=(const QubitOperator& other) {
  if (other.n_qubits_ > n_qubits_) n_qubits_ = other.n_qubits_;
  for (const auto& [k, c] : other.terms_) add_term(PauliString::from_key(k), c);
  return *this;
}

QubitOperator& QubitOperator::operator-=(const QubitOperator& other) {
  if (other.n_qubits_ > n_qubits_) n_qubits_ = other.n_qubits_;
  for (const auto& [k, c] : other.terms_) add_term(PauliString::from_key(k), -c);
  return *this;
}

QubitOperator& QubitOperator::operator*=(cplx scalar) {
  if (std::abs(scalar) < kCoeffPruneTol) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= scalar;
  return *this;
}

QubitOperator QubitOperator::adjoint() const {
  QubitOperator out(n_qubits_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, std::conj(c));
  return out;
}

bool QubitOperator::is_hermitian(double tol) const {
  for (const auto& [k, c] : terms_)
    if (std::abs(c.imag()) > tol) return false;
  return true;
}

double QubitOperator::l1_norm() const {
  double s = 0;
  for (const auto& [k, c] : terms_) s += std::abs(c);
  return s;
}

std::string QubitOperator::to_text() const {
  std::ostringstream os;
  os.precision(17);
  for (const auto& [k, c] : terms_)
    os << c.real() << " " << c.imag() << " " << PauliString::from_key(k).str() << "\n";
  return os.str();
}

QubitOperator QubitOperator::from_text(const std::string& text, int n_qubits) {
  QubitOperator op(n_qubits);
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    double re = 0, im = 0;
    std::string pauli;
    if (!(ls >> re >> im >> pauli))
      throw std::runtime_error("malformed qubit-operator line: " + line);
    op.add_term(PauliString::from_string(pauli), cplx(re, im));
  }
  return op;
}

QubitOperator operator+(QubitOperator a, const QubitOperator& b) { return a += b; }
QubitOperator operator-(QubitOperator a, const QubitOperator& b) { return a -= b; }
QubitOperator operator*(QubitOperator a, cplx scalar) { return a *= scalar; }
QubitOperator operator*(cplx scalar, QubitOperator a) { return a *= scalar; }

QubitOperator operator*(const QubitOperator& a, const QubitOperator& b) {
  QubitOperator out(std::max(a.n_qubits(), b.n_qubits()));
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      auto [phase, p] = pauli_product(PauliString::from_key(ka), PauliString::from_key(kb));
      out.add_term(p, phase * ca * cb);
    }
  return out;
}

QubitOperator commutator(const QubitOperator& a, const QubitOperator& b) {
  return a * b - b * a;
}

Eigen::MatrixXcd dense_matrix(const QubitOperator& op) {
  const int n = op.n_qubits();
  if (n > 14) throw std::invalid_argument("dense_matrix limited to 14 qubits");
  const std::size_t dim = std::size_t(1) << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [k, c] : op.terms()) {
    const PauliString p = PauliString::from_key(k);
    const int ny = std::popcount(p.x & p.z);
    static const cplx kIPow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};
    const cplx ybase = kIPow[ny % 4];
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t row = col ^ p.x;
      // X: 1.  Y: i*(-1)^bit.  Z: (-1)^bit.  Collected: i^{nY} (-1)^{|col & z|}.
      const int sign = std::popcount(std::uint32_t(col) & p.z) & 1;
      m(row, col) += c * ybase * (sign ? -1.0 : 1.0);
    }
  }
  return m;
}

}  // namespace uccvqe
