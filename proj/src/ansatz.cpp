// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "uccvqe/error.hpp"
#include "uccvqe/fermion.hpp"
#include "uccvqe/second_quantization.hpp"

namespace uccvqe {

AnsatzFamily parse_ansatz_family(const std::string& raw) {
  std::string name = raw;
  // Tolerate a leading "k-" or "<digit>-" on the Up families.
  if (auto dash = name.find('-'); dash != std::string::npos && dash <= 2) name = name.substr(dash + 1);
  // Unicode prime or ASCII apostrophe both mark the spin-shared singles.
  std::string ascii;
  for (std::size_t i = 0; i < name.size(); ++i) {
    if ((unsigned char)name[i] == 0xE2 && i + 2 < name.size()) {  // UTF-8 prime
      ascii += '\'';
      i += 2;
    } else {
      ascii += name[i];
    }
  }
  static const std::map<std::string, AnsatzFamily> table = {
      {"UCCSD", AnsatzFamily::UCCSD},       {"UCCS'D", AnsatzFamily::UCCSpD},
      {"UCCD", AnsatzFamily::UCCD},         {"UCCGSD", AnsatzFamily::UCCGSD},
      {"UCCGS'D", AnsatzFamily::UCCGSpD},   {"UCCGD", AnsatzFamily::UCCGD},
      {"UpCCGSD", AnsatzFamily::UpCCGSD},   {"UpCCGS'D", AnsatzFamily::UpCCGSpD},
      {"UpCCGD", AnsatzFamily::UpCCGD},     {"UpCCSGD", AnsatzFamily::UpCCSGD},
      {"UpCCS'GD", AnsatzFamily::UpCCSpGD},
  };
  auto it = table.find(ascii);
  if (it == table.end()) throw ValidationError("unknown ansatz family: " + raw);
  return it->second;
}

std::string to_string(AnsatzFamily family) {
  switch (family) {
    case AnsatzFamily::UCCSD: return "UCCSD";
    case AnsatzFamily::UCCSpD: return "UCCS'D";
    case AnsatzFamily::UCCD: return "UCCD";
    case AnsatzFamily::UCCGSD: return "UCCGSD";
    case AnsatzFamily::UCCGSpD: return "UCCGS'D";
    case AnsatzFamily::UCCGD: return "UCCGD";
    case AnsatzFamily::UpCCGSD: return "UpCCGSD";
    case AnsatzFamily::UpCCGSpD: return "UpCCGS'D";
    case AnsatzFamily::UpCCGD: return "UpCCGD";
    case AnsatzFamily::UpCCSGD: return "UpCCSGD";
    case AnsatzFamily::UpCCSpGD: return "UpCCS'GD";
  }
  return "?";
}

bool is_k_family(AnsatzFamily family) {
  switch (family) {
    case AnsatzFamily::UpCCGSD:
    case AnsatzFamily::UpCCGSpD:
    case AnsatzFamily::UpCCGD:
    case AnsatzFamily::UpCCSGD:
    case AnsatzFamily::UpCCSpGD: return true;
    default: return false;
  }
}

namespace {

bool has_singles(AnsatzFamily f) {
  return f != AnsatzFamily::UCCD && f != AnsatzFamily::UCCGD && f != AnsatzFamily::UpCCGD;
}

bool generalized_singles(AnsatzFamily f) {
  switch (f) {
    case AnsatzFamily::UCCGSD:
    case AnsatzFamily::UCCGSpD:
    case AnsatzFamily::UpCCGSD:
    case AnsatzFamily::UpCCGSpD: return true;
    default: return false;
  }
}

bool primed_singles(AnsatzFamily f) {
  switch (f) {
    case AnsatzFamily::UCCSpD:
    case AnsatzFamily::UCCGSpD:
    case AnsatzFamily::UpCCGSpD:
    case AnsatzFamily::UpCCSpGD: return true;
    default: return false;
  }
}

bool pair_doubles(AnsatzFamily f) { return is_k_family(f); }

bool general_doubles(AnsatzFamily f) {
  return f == AnsatzFamily::UCCGSD || f == AnsatzFamily::UCCGSpD || f == AnsatzFamily::UCCGD;
}

bool needs_single_reference(AnsatzFamily f) {
  switch (f) {
    case AnsatzFamily::UCCSD:
    case AnsatzFamily::UCCSpD:
    case AnsatzFamily::UCCD:
    case AnsatzFamily::UpCCSGD:
    case AnsatzFamily::UpCCSpGD: return true;
    default: return false;
  }
}

}  // namespace

void AnsatzSpec::validate() const {
  if (n_spatial < 1 || n_electrons < 1 || n_electrons > 2 * n_spatial)
    throw ValidationError("ansatz spec has inconsistent sizes");
  if (k < 1) throw ValidationError("k must be >= 1");
  if (k > 1 && !is_k_family(family))
    throw IncompatibleAnsatzError("k > 1 requires a k-Up family; got " + to_string(family));
  if (needs_single_reference(family) && !is_single_reference(reference))
    throw IncompatibleAnsatzError(to_string(family) +
                                  " is restricted to single-reference registers");
  const bool closed_shell_only =
      primed_singles(family) || family == AnsatzFamily::UpCCGD;
  if (closed_shell_only && reference == RegisterLabel::S3)
    throw IncompatibleAnsatzError(to_string(family) +
                                  " holds closed-shell singlet excitations only; "
                                  "S3 is not supported");
  if (primed_singles(family) && is_single_reference(reference) &&
      reference != RegisterLabel::S1)
    throw IncompatibleAnsatzError("spin-shared singles need a closed-shell reference");
  register_circuit(reference, n_electrons, n_qubits());  // fit check
}

std::string Excitation::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Single: os << "single " << idx[0] << "->" << idx[1]; break;
    case Kind::SharedSingle: os << "shared-single " << idx[0] << "->" << idx[1]; break;
    case Kind::PairedDouble: os << "pair-double " << idx[0] << "->" << idx[1]; break;
    case Kind::GeneralDouble:
      os << "double " << idx[0] << "," << idx[1] << "->" << idx[2] << "," << idx[3];
      break;
  }
  return os.str();
}

ParameterMap enumerate_excitations(const AnsatzSpec& spec) {
  spec.validate();
  const int n_sp = spec.n_spatial;
  const int n_so = 2 * n_sp;

  std::vector<Excitation> singles, doubles;

  if (has_singles(spec.family)) {
    if (generalized_singles(spec.family)) {
      for (int p = 0; p < n_sp; ++p)
        for (int q = p + 1; q < n_sp; ++q) {
          if (primed_singles(spec.family)) {
            singles.push_back({Excitation::Kind::SharedSingle, {p, q, -1, -1}});
          } else {
            singles.push_back({Excitation::Kind::Single, {alpha_of(p), alpha_of(q), -1, -1}});
            singles.push_back({Excitation::Kind::Single, {beta_of(p), beta_of(q), -1, -1}});
          }
        }
    } else {
      const std::uint32_t det =
          register_determinants(spec.reference, spec.n_electrons, n_so)[0];
      std::vector<int> occ, virt;
      for (int m = 0; m < n_so; ++m) ((det >> m) & 1u ? occ : virt).push_back(m);
      if (primed_singles(spec.family)) {
        std::set<std::pair<int, int>> pairs;
        for (int i : occ)
          for (int a : virt)
            if (is_beta(i) == is_beta(a)) pairs.insert({spatial_of(i), spatial_of(a)});
        for (auto [p, q] : pairs)
          singles.push_back({Excitation::Kind::SharedSingle, {p, q, -1, -1}});
      } else {
        for (int i : occ)
          for (int a : virt)
            if (is_beta(i) == is_beta(a))
              singles.push_back({Excitation::Kind::Single, {i, a, -1, -1}});
      }
    }
  }

  if (pair_doubles(spec.family)) {
    for (int p = 0; p < n_sp; ++p)
      for (int q = p + 1; q < n_sp; ++q)
        doubles.push_back({Excitation::Kind::PairedDouble, {p, q, -1, -1}});
  } else if (general_doubles(spec.family)) {
    // Unordered pairs of disjoint spin-orbital pairs conserving Sz.
    std::vector<std::pair<int, int>> pairs;
    for (int p = 0; p < n_so; ++p)
      for (int q = p + 1; q < n_so; ++q) pairs.emplace_back(p, q);
    for (std::size_t a = 0; a < pairs.size(); ++a)
      for (std::size_t b = a + 1; b < pairs.size(); ++b) {
        const auto [p, q] = pairs[a];
        const auto [r, s] = pairs[b];
        if (p == r || p == s || q == r || q == s) continue;
        if (int(is_beta(p)) + int(is_beta(q)) != int(is_beta(r)) + int(is_beta(s))) continue;
        doubles.push_back({Excitation::Kind::GeneralDouble, {p, q, r, s}});
      }
  } else {
    // Occupied -> virtual doubles relative to the reference determinant.
    const std::uint32_t det =
        register_determinants(spec.reference, spec.n_electrons, n_so)[0];
    std::vector<int> occ, virt;
    for (int m = 0; m < n_so; ++m) ((det >> m) & 1u ? occ : virt).push_back(m);
    for (std::size_t i = 0; i < occ.size(); ++i)
      for (std::size_t j = i + 1; j < occ.size(); ++j)
        for (std::size_t a = 0; a < virt.size(); ++a)
          for (std::size_t b = a + 1; b < virt.size(); ++b) {
            const int si = int(is_beta(occ[i])) + int(is_beta(occ[j]));
            const int sa = int(is_beta(virt[a])) + int(is_beta(virt[b]));
            if (si != sa) continue;
            doubles.push_back(
                {Excitation::Kind::GeneralDouble, {occ[i], occ[j], virt[a], virt[b]}});
          }
  }

  auto by_idx = [](const Excitation& x, const Excitation& y) { return x.idx < y.idx; };
  std::sort(singles.begin(), singles.end(), by_idx);
  std::sort(doubles.begin(), doubles.end(), by_idx);

  ParameterMap map;
  const int k_factors = is_k_family(spec.family) ? spec.k : 1;
  for (int kf = 1; kf <= k_factors; ++kf) {
    for (const auto& e : singles) map.entries.push_back({e, kf});
    for (const auto& e : doubles) map.entries.push_back({e, kf});
  }
  return map;
}

namespace {

std::vector<FermionOperator> excitation_amplitudes(const Excitation& e) {
  using K = Excitation::Kind;
  switch (e.kind) {
    case K::Single:
      return {FermionOperator::term({{e.idx[1], true}, {e.idx[0], false}})};
    case K::SharedSingle:
      // One amplitude, two generators (alpha-alpha then beta-beta); the
      // printed factor 2 is absorbed into the shared amplitude.
      return {FermionOperator::term({{alpha_of(e.idx[1]), true}, {alpha_of(e.idx[0]), false}}),
              FermionOperator::term({{beta_of(e.idx[1]), true}, {beta_of(e.idx[0]), false}})};
    case K::PairedDouble:
      return {FermionOperator::term({{alpha_of(e.idx[1]), true},
                                     {beta_of(e.idx[1]), true},
                                     {beta_of(e.idx[0]), false},
                                     {alpha_of(e.idx[0]), false}})};
    case K::GeneralDouble:
      return {FermionOperator::term({{e.idx[3], true},
                                     {e.idx[2], true},
                                     {e.idx[1], false},
                                     {e.idx[0], false}})};
  }
  throw ValidationError("unknown excitation kind");
}

}  // namespace

CompiledCircuit compile_circuit(const AnsatzSpec& spec, const ParameterMap& map) {
  spec.validate();
  CompiledCircuit circuit;
  circuit.n_params = map.n_params();
  circuit.n_qubits = spec.n_qubits();
  for (int param = 0; param < map.n_params(); ++param) {
    for (const auto& t : excitation_amplitudes(map.entries[param].excitation)) {
      const QubitOperator encoded =
          jordan_wigner(anti_hermitian_generator(t), circuit.n_qubits);
      for (const auto& [key, coeff] : encoded.terms()) {
        if (std::abs(coeff.real()) > 1e-12)
          throw ValidationError("generator encoding is not anti-Hermitian");
        circuit.rotations.push_back({PauliString::from_key(key), coeff.imag(), param});
      }
    }
  }
  return circuit;
}

void CompiledCircuit::apply(Statevector& state, const Eigen::VectorXd& params) const {
  if (params.size() != n_params)
    throw ValidationError("parameter vector length " + std::to_string(params.size()) +
                          " does not match ansatz parameter count " + std::to_string(n_params));
  auto& amps = state.amplitudes();
  const std::uint32_t dim = std::uint32_t(state.dim());
  static const cplx kIPow[4] = {cplx(1, 0), cplx(0, 1), cplx(-1, 0), cplx(0, -1)};

  struct Prepared {
    std::uint32_t z;
    double c;
    cplx w_ij, w_ji;
  };
  std::vector<Prepared> run;
  std::size_t m = 0;
  while (m < rotations.size()) {
    const std::uint32_t flip = rotations[m].pauli.x;
    run.clear();
    std::size_t end = m;
    while (end < rotations.size() && rotations[end].pauli.x == flip) {
      const auto& rot = rotations[end];
      const double theta = rot.weight * params[rot.param];
      const cplx u = kIPow[std::popcount(rot.pauli.x & rot.pauli.z) % 4];
      const double s = std::sin(theta);
      run.push_back({rot.pauli.z, std::cos(theta), cplx(0, s) * std::conj(u), cplx(0, s) * u});
      ++end;
    }
    if (flip == 0) {
      for (std::uint32_t i = 0; i < dim; ++i) {
        cplx a = amps[i];
        for (const auto& r : run) {
          // diagonal exponential: phase exp(+-i theta)
          const bool neg = std::popcount(i & r.z) & 1;
          const double s_im = neg ? -r.w_ji.imag() : r.w_ji.imag();
          // w_ji = i sin(theta) for z-only strings (u = 1)
          a *= cplx(r.c, s_im);
        }
        amps[i] = a;
      }
    } else {
      for (std::uint32_t i = 0; i < dim; ++i) {
        const std::uint32_t j = i ^ flip;
        if (j < i) continue;
        cplx ai = amps[i];
        cplx aj = amps[j];
        for (const auto& r : run) {
          const double sign = (std::popcount(i & r.z) & 1) ? -1.0 : 1.0;
          const cplx ni = r.c * ai + sign * r.w_ij * aj;
          const cplx nj = r.c * aj + sign * r.w_ji * ai;
          ai = ni;
          aj = nj;
        }
        amps[i] = ai;
        amps[j] = aj;
      }
    }
    m = end;
  }
}

std::vector<std::pair<PauliString, double>> gate_sequence(const CompiledCircuit& circuit,
                                                          const Eigen::VectorXd& params) {
  if (params.size() != circuit.n_params)
    throw ValidationError("parameter vector length mismatch");
  std::vector<std::pair<PauliString, double>> gates;
  for (const auto& rot : circuit.rotations) {
    const double angle = rot.weight * params[rot.param];
    if (angle != 0.0) gates.emplace_back(rot.pauli, angle);
  }
  return gates;
}

std::string ansatz_catalog(const AnsatzSpec& spec, const ParameterMap& map) {
  std::ostringstream os;
  os << to_string(spec.family) << " k=" << spec.k << " n_spatial=" << spec.n_spatial
     << " n_electrons=" << spec.n_electrons << " reference=" << to_string(spec.reference)
     << " params=" << map.n_params() << "\n";
  for (int p = 0; p < map.n_params(); ++p)
    os << p << " k" << map.entries[p].k_factor << " " << map.entries[p].excitation.str() << "\n";
  return os.str();
}

std::vector<std::pair<std::string, double>> classify_amplitudes(
    const ParameterMap& map, const Eigen::VectorXd& params,
    const std::vector<int>& occupied_spatial) {
  if (params.size() != map.n_params()) throw ValidationError("parameter vector length mismatch");
  const std::set<int> occ(occupied_spatial.begin(), occupied_spatial.end());
  auto occupied = [&occ](int spatial) { return occ.count(spatial) > 0; };

  static const std::vector<std::string> kOrder = {
      "t_A^P",      "t_A^B",      "t_P^Q",      "t_{A,A}^{P,P}", "t_{A,A}^{B,B}",
      "t_{P,P}^{Q,Q}", "t_{A,B}^{P,Q}", "t_{A,B}^{C,D}", "t_{P,Q}^{R,S}", "t_{A,P}^{B,Q}",
      "t_{A,B}^{C,P}", "t_{A,P}^{Q,R}"};
  std::map<std::string, double> weight;
  std::set<std::string> present;

  double total = 0;
  for (int p = 0; p < map.n_params(); ++p) {
    const Excitation& e = map.entries[p].excitation;
    const double t = std::abs(params[p]);
    std::string cls;
    using K = Excitation::Kind;
    if (e.kind == K::Single || e.kind == K::SharedSingle) {
      const int from = e.kind == K::Single ? spatial_of(e.idx[0]) : e.idx[0];
      const int to = e.kind == K::Single ? spatial_of(e.idx[1]) : e.idx[1];
      const int n_occ = int(occupied(from)) + int(occupied(to));
      cls = n_occ == 1 ? "t_A^P" : (n_occ == 2 ? "t_A^B" : "t_P^Q");
    } else if (e.kind == K::PairedDouble) {
      const int n_occ = int(occupied(e.idx[0])) + int(occupied(e.idx[1]));
      cls = n_occ == 1 ? "t_{A,A}^{P,P}" : (n_occ == 2 ? "t_{A,A}^{B,B}" : "t_{P,P}^{Q,Q}");
    } else {
      int from_occ = int(occupied(spatial_of(e.idx[0]))) + int(occupied(spatial_of(e.idx[1])));
      int to_occ = int(occupied(spatial_of(e.idx[2]))) + int(occupied(spatial_of(e.idx[3])));
      if (from_occ < to_occ) std::swap(from_occ, to_occ);  // canonical direction
      if (from_occ == 2 && to_occ == 0) cls = "t_{A,B}^{P,Q}";
      else if (from_occ == 2 && to_occ == 2) cls = "t_{A,B}^{C,D}";
      else if (from_occ == 0 && to_occ == 0) cls = "t_{P,Q}^{R,S}";
      else if (from_occ == 1 && to_occ == 1) cls = "t_{A,P}^{B,Q}";
      else if (from_occ == 2 && to_occ == 1) cls = "t_{A,B}^{C,P}";
      else cls = "t_{A,P}^{Q,R}";
    }
    weight[cls] += t;
    present.insert(cls);
    total += t;
  }
  if (total <= 0)
    throw ValidationError("amplitude weights undefined: all amplitudes are zero");

  std::vector<std::pair<std::string, double>> out;
  for (const auto& cls : kOrder)
    if (present.count(cls)) out.emplace_back(cls, 100.0 * weight[cls] / total);
  return out;
}

}  // namespace uccvqe
