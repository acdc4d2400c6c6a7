// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <iostream>

#include "uccvqe/error.hpp"
#include "uccvqe/fci.hpp"
#include "uccvqe/parallel.hpp"
#include "uccvqe/rhf.hpp"
#include "uccvqe/scan.hpp"
#include "uccvqe/second_quantization.hpp"

namespace uccvqe {

namespace {

std::string format_scan_value(const std::string& fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt.c_str(), v);
  return buf;
}

std::string resolve_pattern(const std::string& pattern, const std::string& formatted) {
  std::string out = pattern;
  const std::string token = "{scan}";
  const auto pos = out.find(token);
  if (pos == std::string::npos)
    throw ValidationError("fcidump_pattern lacks the {scan} placeholder: " + pattern);
  out.replace(pos, token.size(), formatted);
  return out;
}

std::uint64_t point_seed(std::uint64_t base, double scan_value) {
  // Seed derived from the value, not the point index, so reversed or
  // partial scans reproduce identical per-point results.
  const auto bits = std::bit_cast<std::uint64_t>(scan_value);
  std::uint64_t x = base ^ (bits * 0x9e3779b97f4a7c15ULL);
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  return x;
}

}  // namespace

PointSystem system_for_point(const RunConfig& config, double scan_value) {
  PointSystem sys;
  if (config.molecule == "fcidump") {
    const std::string path =
        resolve_pattern(config.fcidump_pattern, format_scan_value(config.scan_format, scan_value));
    FcidumpData data = read_fcidump(path);
    const int total_electrons =
        config.fcidump_electrons >= 0 ? config.fcidump_electrons : data.n_electrons;
    sys.mo = fold_core(data.mo, config.frozen_core);
    sys.n_electrons = total_electrons - 2 * int(config.frozen_core.size());
  } else {
    const Geometry geom = template_geometry(config, scan_value);
    const BasisSet basis = build_basis(config.basis, geom);
    const AOIntegrals ao = compute_s_integrals(geom, basis);
    const int n_total = geom.n_electrons();
    const RhfResult rhf = run_rhf(geom, ao, closed_shell_electron_count(n_total));
    sys.mo = transform_to_mo(ao, rhf.coefficients, config.frozen_core);
    sys.n_electrons = n_total - 2 * int(config.frozen_core.size());
  }
  if (sys.n_electrons < 1) throw ValidationError("no active electrons left after freezing");
  return sys;
}

std::string classify_state(double s2, double threshold) {
  static const std::pair<const char*, double> kLabels[] = {
      {"singlet", 0.0}, {"doublet", 0.75}, {"triplet", 2.0}, {"quadruplet", 3.75}};
  for (const auto& [name, value] : kLabels)
    if (std::abs(s2 - value) <= threshold) return name;
  return "mixed";
}

CurveRecord run_point(const RunConfig& config, double scan_value) {
  CurveRecord rec;
  rec.scan_value = scan_value;
  try {
    const PointSystem sys = system_for_point(config, scan_value);
    const int n_spatial = sys.mo.n_orb;
    const int n_qubits = 2 * n_spatial;
    const RegisterLabel label = parse_register_label(config.register_label);
    const int ms2 = register_ms2(label);

    const QubitOperator h_q = jordan_wigner(hamiltonian_operator(sys.mo), n_qubits);
    const QubitOperator s2_q = jordan_wigner(s2_operator(n_spatial), n_qubits);
    const Statevector reference = prepare_register(label, sys.n_electrons, n_qubits);

    AnsatzSpec spec;
    spec.family = parse_ansatz_family(config.ansatz);
    spec.k = config.k;
    spec.n_spatial = n_spatial;
    spec.n_electrons = sys.n_electrons;
    spec.reference = label;
    const ParameterMap map = enumerate_excitations(spec);
    Objective objective(h_q, s2_q, reference, compile_circuit(spec, map), config.penalty);

    RestartPolicy policy;
    policy.n_restarts = config.n_restarts > 0 ? config.n_restarts : (config.k > 1 ? 8 : 1);
    policy.r_f = config.r_f;
    policy.seed = point_seed(config.seed, scan_value);

    OptimOptions options;
    options.grad_tol = config.grad_tol;
    options.energy_tol = config.energy_tol;
    options.max_iterations = config.max_iterations;

    const VQEResult result =
        minimize(objective, policy, options, std::nullopt, config.progress ? &std::cerr : nullptr);

    rec.e_vqe = result.e_vqe;
    rec.energy = result.energy;
    rec.s2 = result.s2;
    rec.n = result.n_electrons;
    rec.params = result.params;
    rec.label = classify_state(result.s2);
    rec.spread_min = result.e_vqe;
    rec.spread_max = result.e_vqe;
    for (double e : result.restart_evqe)
      if (std::isfinite(e)) {
        rec.spread_min = std::min(rec.spread_min, e);
        rec.spread_max = std::max(rec.spread_max, e);
      }

    const FCISolution fci = fci_solve(sys.mo, sys.n_electrons, ms2, config.n_roots);
    rec.fci.assign(fci.eigenvalues.begin(), fci.eigenvalues.end());
    rec.ok = true;
  } catch (const std::exception& e) {
    rec.ok = false;
    rec.error = e.what();
  }
  return rec;
}

std::vector<CurveRecord> run_scan(const RunConfig& config) {
  config.validate();
  std::vector<double> values = scan_values(config);
  std::vector<CurveRecord> records(values.size());
  parallel_for(values.size(), [&](std::size_t i) { records[i] = run_point(config, values[i]); });
  std::sort(records.begin(), records.end(),
            [](const CurveRecord& a, const CurveRecord& b) { return a.scan_value < b.scan_value; });
  if (std::none_of(records.begin(), records.end(), [](const CurveRecord& r) { return r.ok; }))
    throw Error("every scan point failed");
  return records;
}

std::vector<double> scan_values_normalized(const RunConfig&);

std::vector<Table2Cell> reproduce_table2(const std::string& fixture_path,
                                         const std::vector<int>& frozen_core,
                                         std::uint64_t seed) {
  FcidumpData data = read_fcidump(fixture_path);
  const MOIntegrals mo = fold_core(data.mo, frozen_core);
  const int n_electrons = data.n_electrons - 2 * int(frozen_core.size());
  const int n_spatial = mo.n_orb;
  const int n_qubits = 2 * n_spatial;

  const QubitOperator h_q = jordan_wigner(hamiltonian_operator(mo), n_qubits);
  const QubitOperator s2_q = jordan_wigner(s2_operator(n_spatial), n_qubits);

  struct Row {
    const char* reg;
    const char* ansatz;
    int k;
    double penalty;
    int restarts;
  };
  // The crossover grid: unrestricted singles, spin-shared singles and
  // doubles-only operators against the three singlet registers.
  const std::vector<Row> rows = {
      {"S1", "UCCSD", 1, 0.0, 4},      {"S1", "UCCS'D", 1, 0.0, 2},
      {"S1", "UpCCGSD", 1, 0.0, 4},    {"S2", "UpCCGSD", 1, 0.0, 4},
      {"S3", "UpCCGSD", 1, 0.0, 2},    {"S1", "UpCCGSD", 2, 0.0, 8},
      {"S2", "UpCCGSD", 2, 0.0, 8},    {"S1", "UpCCGS'D", 1, 0.0, 2},
      {"S2", "UpCCGS'D", 1, 0.0, 2},   {"S1", "UpCCGS'D", 2, 0.0, 4},
      {"S2", "UpCCGS'D", 2, 0.0, 4},   {"S1", "UCCGD", 1, 0.0, 1},
      {"S2", "UCCGD", 1, 0.0, 1},      {"S3", "UCCGD", 1, 0.0, 2},
      {"S3", "UCCGD", 1, 10.0, 1},
  };

  std::vector<Table2Cell> cells;
  for (const auto& row : rows) {
    Table2Cell cell;
    cell.register_label = row.reg;
    cell.ansatz = row.ansatz;
    cell.k = row.k;
    cell.penalty = row.penalty;

    const RegisterLabel label = parse_register_label(row.reg);
    AnsatzSpec spec;
    spec.family = parse_ansatz_family(row.ansatz);
    spec.k = row.k;
    spec.n_spatial = n_spatial;
    spec.n_electrons = n_electrons;
    spec.reference = label;
    const ParameterMap map = enumerate_excitations(spec);
    Objective objective(h_q, s2_q, prepare_register(label, n_electrons, n_qubits),
                        compile_circuit(spec, map), row.penalty);

    RestartPolicy policy;
    policy.n_restarts = row.restarts;
    policy.r_f = 1e-2;
    policy.seed = seed + std::hash<std::string>{}(std::string(row.reg) + row.ansatz) +
                  std::uint64_t(row.k) * 977 + std::uint64_t(row.penalty * 7.0);

    OptimOptions options;
    options.grad_tol = 1e-5;   // labels stabilize well before tight stationarity
    options.energy_tol = 1e-9;
    options.max_iterations = 300;

    const VQEResult result = minimize(objective, policy, options);
    cell.s2 = result.s2;
    cell.energy = result.energy;
    cell.label = classify_state(result.s2);

    const Statevector state = objective.state_at(result.params);
    cell.open_shell = false;
    for (const auto& [bits, amp] : dominant_determinants(state, 0.1)) {
      int singly = 0;
      const std::uint32_t det = parse_bitstring(bits);
      for (int p = 0; p < n_spatial; ++p) {
        const bool a = (det >> (2 * p)) & 1u;
        const bool b = (det >> (2 * p + 1)) & 1u;
        if (a != b) ++singly;
      }
      if (singly >= 2) cell.open_shell = true;
    }
    cells.push_back(cell);
  }
  return cells;
}

std::string format_table2(const std::vector<Table2Cell>& cells) {
  std::string out =
      "register  ansatz      k  penalty  label       open_shell  <S2>      E\n";
  char buf[160];
  for (const auto& c : cells) {
    std::snprintf(buf, sizeof buf, "%-8s  %-10s  %d  %-7g  %-10s  %-10s  %-8.4f  %.6f\n",
                  c.register_label.c_str(), c.ansatz.c_str(), c.k, c.penalty, c.label.c_str(),
                  c.open_shell ? "open" : "closed", c.s2, c.energy);
    out += buf;
  }
  return out;
}

}  // namespace uccvqe
