// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uccvqe/ansatz.hpp"
#include "uccvqe/geometry.hpp"
#include "uccvqe/mo_integrals.hpp"
#include "uccvqe/registers.hpp"
#include "uccvqe/vqe.hpp"

namespace uccvqe {

/// Flat key-value run configuration (see docs in README / config files).
struct RunConfig {
  std::string molecule = "h2";      // h2 | h3 | h3+ | h4 | fcidump
  std::string basis = "sto-3g";
  double scan_start = 0.5;
  double scan_stop = 1.5;
  double scan_step = 0.1;
  std::string register_label = "S1";
  std::string ansatz = "UCCSD";
  int k = 1;
  double penalty = 0.0;
  int n_restarts = 0;               // 0: default rule (8 when k > 1, else 1)
  double r_f = 1e-2;
  std::uint64_t seed = 1234;
  std::vector<int> frozen_core;
  std::string fcidump_pattern;      // "{scan}" replaced by the formatted value
  std::string scan_format = "%.2f"; // formatting of {scan} in the pattern
  int fcidump_electrons = -1;       // override; default: NELEC from the file
  std::string output_prefix = "scan_out";
  double h3_fixed_bond = 0.90;      // Angstrom, the unscanned bond
  double h4_bond = 0.75;            // Angstrom, fixed H-H distance
  int n_roots = 2;
  double grad_tol = 1e-7;
  double energy_tol = 1e-10;
  int max_iterations = 500;
  int max_restart_spread_samples = 0;  // reserved
  bool progress = false;

  void validate() const;
};

RunConfig parse_run_config(const std::string& path);
std::string config_echo(const RunConfig& config);  // canonical key=value form

/// One geometry point of a scan.
struct CurveRecord {
  double scan_value = 0;
  bool ok = false;
  std::string error;
  double e_vqe = 0, energy = 0, s2 = 0, n = 0;
  std::vector<double> fci;   // lowest sector roots (may be empty on failure)
  std::string label;
  double spread_min = 0, spread_max = 0;
  Eigen::VectorXd params;    // winning amplitudes (for the weight table)
};

/// Integrals for one scan point: built-in s-orbital engine for the
/// hydrogen templates, FCIDUMP lookup otherwise. Also reports the
/// active electron count.
struct PointSystem {
  MOIntegrals mo;
  int n_electrons = 0;
};
PointSystem system_for_point(const RunConfig& config, double scan_value);

/// Geometry template for the hydrogen systems (throws for fcidump runs).
Geometry template_geometry(const RunConfig& config, double scan_value);

std::vector<double> scan_values(const RunConfig& config);

/// Full pipeline for every scan point; per-point failures are recorded,
/// not fatal. Throws Error when no point succeeds.
std::vector<CurveRecord> run_scan(const RunConfig& config);

/// Single-point pipeline, exposed for tests and the table2 driver.
CurveRecord run_point(const RunConfig& config, double scan_value);

/// Nearest spin label within 0.1 of s(s+1), else "mixed".
std::string classify_state(double s2, double threshold = 0.1);

/// CSV + manifest + amplitude-weight table. Returns the CSV path.
std::string emit_outputs(const std::vector<CurveRecord>& records, const RunConfig& config);
std::string curve_csv(const std::vector<CurveRecord>& records);

struct Table2Cell {
  std::string register_label;
  std::string ansatz;
  int k = 1;
  double penalty = 0;
  std::string label;     // resulting state classification
  double s2 = 0;
  double energy = 0;
  bool open_shell = false;  // dominant determinants carry two singly
                            // occupied spatial orbitals
};

/// Registers x ansatz grid on one fixture, in the layout of the
/// crossover table. fixture: FCIDUMP path for the CH2-like system.
std::vector<Table2Cell> reproduce_table2(const std::string& fixture_path,
                                         const std::vector<int>& frozen_core,
                                         std::uint64_t seed = 1234);

std::string format_table2(const std::vector<Table2Cell>& cells);

}  // namespace uccvqe
