// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "uccvqe/error.hpp"
#include "uccvqe/scan.hpp"

namespace uccvqe {

namespace {

constexpr const char* kVersion = "uccvqe 0.1.0";

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string curve_csv(const std::vector<CurveRecord>& records) {
  std::string csv = "scan_value,e_vqe,e,s2,n,fci_0,fci_1,label,spread_min,spread_max\n";
  for (const auto& r : records) {
    if (!r.ok) continue;
    csv += num(r.scan_value) + "," + num(r.e_vqe) + "," + num(r.energy) + "," + num(r.s2) + "," +
           num(r.n) + ",";
    csv += (r.fci.size() > 0 ? num(r.fci[0]) : "") + std::string(",");
    csv += (r.fci.size() > 1 ? num(r.fci[1]) : "") + std::string(",");
    csv += r.label + "," + num(r.spread_min) + "," + num(r.spread_max) + "\n";
  }
  return csv;
}

std::string emit_outputs(const std::vector<CurveRecord>& records, const RunConfig& config) {
  const std::string csv_path = config.output_prefix + ".csv";
  {
    std::ofstream out(csv_path);
    if (!out) throw Error("cannot write output file: " + csv_path);
    out << curve_csv(records);
  }

  nlohmann::json manifest;
  manifest["version"] = kVersion;
  manifest["config"] = config_echo(config);
  manifest["seed"] = config.seed;
  manifest["n_points"] = records.size();
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& r : records)
    if (!r.ok) failures.push_back({{"scan_value", r.scan_value}, {"error", r.error}});
  manifest["failures"] = failures;
  {
    std::ofstream out(config.output_prefix + "_manifest.json");
    if (!out) throw Error("cannot write manifest");
    out << manifest.dump(2) << "\n";
  }

  // Per-class amplitude weights at the minimum-energy point.
  const CurveRecord* best = nullptr;
  for (const auto& r : records)
    if (r.ok && (!best || r.energy < best->energy)) best = &r;
  if (best && best->params.size() > 0) {
    try {
      const PointSystem sys = system_for_point(config, best->scan_value);
      AnsatzSpec spec;
      spec.family = parse_ansatz_family(config.ansatz);
      spec.k = config.k;
      spec.n_spatial = sys.mo.n_orb;
      spec.n_electrons = sys.n_electrons;
      spec.reference = parse_register_label(config.register_label);
      const ParameterMap map = enumerate_excitations(spec);
      const auto weights = classify_amplitudes(
          map, best->params,
          occupied_spatials(spec.reference, sys.n_electrons, 2 * sys.mo.n_orb));
      std::ofstream out(config.output_prefix + "_amplitudes.txt");
      if (out) {
        out << "# amplitude weights (% of total |t|) at scan_value = " << num(best->scan_value)
            << "\n";
        char buf[80];
        for (const auto& [cls, w] : weights) {
          std::snprintf(buf, sizeof buf, "%-16s %8.2f\n", cls.c_str(), w);
          out << buf;
        }
      }
    } catch (const std::exception&) {
      // all-zero amplitudes or a vanished fixture; the table is optional
    }
  }
  return csv_path;
}

}  // namespace uccvqe
