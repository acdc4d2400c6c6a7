// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/registers.hpp"

#include <bit>
#include <set>

#include "uccvqe/error.hpp"

namespace uccvqe {

RegisterLabel parse_register_label(const std::string& s) {
  if (s == "S" || s == "S1") return RegisterLabel::S1;
  if (s == "S2") return RegisterLabel::S2;
  if (s == "S3") return RegisterLabel::S3;
  if (s == "T") return RegisterLabel::T;
  if (s == "D") return RegisterLabel::D;
  if (s == "Q") return RegisterLabel::Q;
  throw ValidationError("unknown register label: " + s);
}

std::string to_string(RegisterLabel label) {
  switch (label) {
    case RegisterLabel::S1: return "S1";
    case RegisterLabel::S2: return "S2";
    case RegisterLabel::S3: return "S3";
    case RegisterLabel::T: return "T";
    case RegisterLabel::D: return "D";
    case RegisterLabel::Q: return "Q";
  }
  return "?";
}

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

std::uint32_t fill_mask(int count) { return count == 0 ? 0 : (std::uint32_t(1) << count) - 1; }

}  // namespace

PrepCircuit register_circuit(RegisterLabel label, int n_electrons, int n_qubits) {
  require(n_electrons >= 1, "register needs at least one electron");
  require(n_electrons <= n_qubits, "register electron count exceeds qubit count");
  PrepCircuit c;
  auto xs_upto = [&c](int count) {
    for (int q = 0; q < count; ++q) c.push_back({PrepGate::Kind::X, q, 0});
  };
  switch (label) {
    case RegisterLabel::S1:
      require(n_electrons % 2 == 0, "S register needs an even electron count");
      xs_upto(n_electrons);
      return c;
    case RegisterLabel::D:
      require(n_electrons % 2 == 1, "D register needs an odd electron count");
      xs_upto(n_electrons);
      return c;
    case RegisterLabel::T:
      require(n_electrons % 2 == 0 && n_electrons >= 2, "T register needs an even count >= 2");
      require(n_electrons + 1 <= n_qubits, "T register does not fit the qubit register");
      xs_upto(n_electrons - 2);
      c.push_back({PrepGate::Kind::X, n_electrons - 2, 0});
      c.push_back({PrepGate::Kind::X, n_electrons, 0});
      return c;
    case RegisterLabel::Q:
      require(n_electrons % 2 == 1 && n_electrons >= 3, "Q register needs an odd count >= 3");
      require(n_electrons + 2 <= n_qubits, "Q register does not fit the qubit register");
      xs_upto(n_electrons - 3);
      c.push_back({PrepGate::Kind::X, n_electrons - 3, 0});
      c.push_back({PrepGate::Kind::X, n_electrons - 1, 0});
      c.push_back({PrepGate::Kind::X, n_electrons + 1, 0});
      return c;
    case RegisterLabel::S2: {
      require(n_electrons % 2 == 0 && n_electrons >= 2, "S2 register needs an even count >= 2");
      require(n_electrons + 2 <= n_qubits, "S2 register does not fit the qubit register");
      const int o = n_electrons - 2;  // block acts on the frontier orbitals
      xs_upto(o);
      c.push_back({PrepGate::Kind::X, o + 0, 0});
      c.push_back({PrepGate::Kind::X, o + 1, 0});
      c.push_back({PrepGate::Kind::X, o + 2, 0});
      c.push_back({PrepGate::Kind::H, o + 2, 0});
      c.push_back({PrepGate::Kind::CNOT, o + 2, o + 0});
      c.push_back({PrepGate::Kind::CNOT, o + 2, o + 1});
      c.push_back({PrepGate::Kind::CNOT, o + 2, o + 3});
      return c;
    }
    case RegisterLabel::S3: {
      require(n_electrons % 2 == 0 && n_electrons >= 2, "S3 register needs an even count >= 2");
      require(n_electrons + 2 <= n_qubits, "S3 register does not fit the qubit register");
      const int o = n_electrons - 2;
      xs_upto(o);
      c.push_back({PrepGate::Kind::X, o + 0, 0});
      c.push_back({PrepGate::Kind::X, o + 1, 0});
      c.push_back({PrepGate::Kind::X, o + 2, 0});
      c.push_back({PrepGate::Kind::H, o + 0, 0});
      c.push_back({PrepGate::Kind::CNOT, o + 0, o + 3});
      c.push_back({PrepGate::Kind::CNOT, o + 0, o + 2});
      c.push_back({PrepGate::Kind::CNOT, o + 0, o + 1});
      return c;
    }
  }
  throw ValidationError("unknown register label");
}

void apply_circuit(Statevector& state, const PrepCircuit& circuit) {
  for (const auto& g : circuit) {
    switch (g.kind) {
      case PrepGate::Kind::X: state.apply_x(g.qubit); break;
      case PrepGate::Kind::H: state.apply_h(g.qubit); break;
      case PrepGate::Kind::CNOT: state.apply_cnot(g.qubit, g.target); break;
    }
  }
}

Statevector prepare_register(RegisterLabel label, int n_electrons, int n_qubits) {
  Statevector state(n_qubits);
  apply_circuit(state, register_circuit(label, n_electrons, n_qubits));
  return state;
}

std::vector<std::uint32_t> register_determinants(RegisterLabel label, int n_electrons,
                                                 int n_qubits) {
  register_circuit(label, n_electrons, n_qubits);  // validates the fit
  const int n = n_electrons;
  switch (label) {
    case RegisterLabel::S1:
    case RegisterLabel::D: return {fill_mask(n)};
    case RegisterLabel::T:
      return {fill_mask(n - 2) | (1u << (n - 2)) | (1u << n)};
    case RegisterLabel::Q:
      return {fill_mask(n - 3) | (1u << (n - 3)) | (1u << (n - 1)) | (1u << (n + 1))};
    case RegisterLabel::S2: {
      const int o = n - 2;
      return {fill_mask(o) | (1u << o) | (1u << (o + 1)),
              fill_mask(o) | (1u << (o + 2)) | (1u << (o + 3))};
    }
    case RegisterLabel::S3: {
      const int o = n - 2;
      return {fill_mask(o) | (1u << (o + 1)) | (1u << (o + 2)),
              fill_mask(o) | (1u << o) | (1u << (o + 3))};
    }
  }
  throw ValidationError("unknown register label");
}

int register_ms2(RegisterLabel label) {
  switch (label) {
    case RegisterLabel::S1:
    case RegisterLabel::S2:
    case RegisterLabel::S3: return 0;
    case RegisterLabel::T: return 2;
    case RegisterLabel::D: return 1;
    case RegisterLabel::Q: return 3;
  }
  return 0;
}

bool is_single_reference(RegisterLabel label) {
  return label == RegisterLabel::S1 || label == RegisterLabel::T || label == RegisterLabel::D ||
         label == RegisterLabel::Q;
}

bool is_closed_shell(RegisterLabel label) {
  return label == RegisterLabel::S1 || label == RegisterLabel::S2;
}

std::vector<int> occupied_spatials(RegisterLabel label, int n_electrons, int n_qubits) {
  std::set<int> occ;
  for (std::uint32_t det : register_determinants(label, n_electrons, n_qubits))
    for (int q = 0; q < n_qubits; ++q)
      if ((det >> q) & 1u) occ.insert(q / 2);
  return {occ.begin(), occ.end()};
}

}  // namespace uccvqe
