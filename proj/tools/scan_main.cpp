// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "uccvqe/error.hpp"
#include "uccvqe/fci.hpp"
#include "uccvqe/scan.hpp"

namespace {

int cmd_run(const std::string& config_path) {
  const uccvqe::RunConfig config = uccvqe::parse_run_config(config_path);
  const auto records = uccvqe::run_scan(config);
  const std::string csv = uccvqe::emit_outputs(records, config);
  int failures = 0;
  for (const auto& r : records) {
    if (!r.ok) {
      ++failures;
      std::cerr << "point " << r.scan_value << " failed: " << r.error << "\n";
      continue;
    }
    std::printf("%-10.4f E=%.10f <S2>=%.4f %s\n", r.scan_value, r.energy, r.s2,
                r.label.c_str());
  }
  std::cout << "wrote " << csv << "\n";
  return failures == 0 ? 0 : 2;
}

int cmd_table2(const std::string& fixture_dir, const std::string& file, int frozen) {
  namespace fs = std::filesystem;
  fs::path fixture = fs::path(fixture_dir) / file;
  if (!fs::exists(fixture)) {
    std::cerr << "fixture not found, skipping: " << fixture << "\n";
    return 0;
  }
  std::vector<int> frozen_core;
  for (int i = 0; i < frozen; ++i) frozen_core.push_back(i);
  const auto cells = uccvqe::reproduce_table2(fixture.string(), frozen_core);
  std::cout << uccvqe::format_table2(cells);
  return 0;
}

int cmd_roundtrip(const std::string& path) {
  const uccvqe::FcidumpData data = uccvqe::read_fcidump(path);
  const std::string tmp = path + ".roundtrip";
  uccvqe::write_fcidump(data.mo, data.n_electrons, data.ms2, tmp);
  const uccvqe::FcidumpData back = uccvqe::read_fcidump(tmp);
  double defect = std::abs(back.mo.constant() - data.mo.constant());
  defect = std::max(defect, (back.mo.h - data.mo.h).cwiseAbs().maxCoeff());
  defect = std::max(defect, (back.mo.g.data() - data.mo.g.data()).cwiseAbs().maxCoeff());
  std::printf("NORB=%d NELEC=%d MS2=%d round-trip defect=%.3g\n", data.mo.n_orb,
              data.n_electrons, data.ms2, defect);
  std::filesystem::remove(tmp);
  if (defect != 0.0) {
    std::cerr << "round trip is not bit-exact\n";
    return 1;
  }
  std::cout << "round trip bit-exact\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VQE scans over molecular geometries with UCC ansatz variants"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "run a scan from a config file");
  run->add_option("config", config_path, "key = value config file")->required();

  std::string fixture_dir, fixture_file = "ch2_r1.10.fcidump";
  int frozen = 1;
  auto* table2 = app.add_subcommand("table2", "spin-crossover grid on a fixture");
  table2->add_option("fixture-dir", fixture_dir, "directory with FCIDUMP fixtures")->required();
  table2->add_option("--file", fixture_file, "fixture file name");
  table2->add_option("--frozen", frozen, "number of frozen core orbitals");

  std::string dump_path;
  auto* rt = app.add_subcommand("fcidump-roundtrip", "read, rewrite and compare an FCIDUMP file");
  rt->add_option("file", dump_path, "FCIDUMP file")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (run->parsed()) return cmd_run(config_path);
    if (table2->parsed()) return cmd_table2(fixture_dir, fixture_file, frozen);
    if (rt->parsed()) return cmd_roundtrip(dump_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
