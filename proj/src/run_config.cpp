// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <sstream>

#include "uccvqe/error.hpp"
#include "uccvqe/scan.hpp"

namespace uccvqe {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string token;
  std::istringstream is(s);
  while (std::getline(is, token, ',')) {
    token = trim(token);
    if (!token.empty()) out.push_back(std::stoi(token));
  }
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (!(scan_step > 0)) throw ValidationError("scan_step must be positive");
  if (scan_stop < scan_start - 1e-12) throw ValidationError("degenerate scan range");
  if (k < 1) throw ValidationError("k must be >= 1");
  if (penalty < 0) throw ValidationError("penalty must be non-negative");
  if (molecule == "fcidump" && fcidump_pattern.empty())
    throw ValidationError("fcidump runs need fcidump_pattern");
  parse_register_label(register_label);
  parse_ansatz_family(ansatz);
}

RunConfig parse_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  RunConfig c;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value: " + line, line_number);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "molecule") c.molecule = value;
      else if (key == "basis") c.basis = value;
      else if (key == "scan_start") c.scan_start = std::stod(value);
      else if (key == "scan_stop") c.scan_stop = std::stod(value);
      else if (key == "scan_step") c.scan_step = std::stod(value);
      else if (key == "register") c.register_label = value;
      else if (key == "ansatz") c.ansatz = value;
      else if (key == "k") c.k = std::stoi(value);
      else if (key == "penalty") c.penalty = std::stod(value);
      else if (key == "restarts") c.n_restarts = std::stoi(value);
      else if (key == "r_f") c.r_f = std::stod(value);
      else if (key == "seed") c.seed = std::stoull(value);
      else if (key == "frozen_core") c.frozen_core = parse_int_list(value);
      else if (key == "fcidump_pattern") c.fcidump_pattern = value;
      else if (key == "scan_format") c.scan_format = value;
      else if (key == "fcidump_electrons") c.fcidump_electrons = std::stoi(value);
      else if (key == "output_prefix") c.output_prefix = value;
      else if (key == "h3_fixed_bond") c.h3_fixed_bond = std::stod(value);
      else if (key == "h4_bond") c.h4_bond = std::stod(value);
      else if (key == "n_roots") c.n_roots = std::stoi(value);
      else if (key == "grad_tol") c.grad_tol = std::stod(value);
      else if (key == "energy_tol") c.energy_tol = std::stod(value);
      else if (key == "max_iterations") c.max_iterations = std::stoi(value);
      else if (key == "progress") c.progress = (value == "1" || value == "true");
      else throw ParseError("unknown config key: " + key, line_number);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError("bad value for " + key + ": " + e.what(), line_number);
    }
  }
  c.validate();
  return c;
}

std::string config_echo(const RunConfig& c) {
  std::ostringstream os;
  os.precision(17);
  os << "molecule = " << c.molecule << "\n";
  os << "basis = " << c.basis << "\n";
  os << "scan_start = " << c.scan_start << "\n";
  os << "scan_stop = " << c.scan_stop << "\n";
  os << "scan_step = " << c.scan_step << "\n";
  os << "register = " << c.register_label << "\n";
  os << "ansatz = " << c.ansatz << "\n";
  os << "k = " << c.k << "\n";
  os << "penalty = " << c.penalty << "\n";
  os << "restarts = " << c.n_restarts << "\n";
  os << "r_f = " << c.r_f << "\n";
  os << "seed = " << c.seed << "\n";
  os << "frozen_core = ";
  for (std::size_t i = 0; i < c.frozen_core.size(); ++i)
    os << (i ? "," : "") << c.frozen_core[i];
  os << "\n";
  if (!c.fcidump_pattern.empty()) {
    os << "fcidump_pattern = " << c.fcidump_pattern << "\n";
    os << "scan_format = " << c.scan_format << "\n";
  }
  if (c.fcidump_electrons >= 0) os << "fcidump_electrons = " << c.fcidump_electrons << "\n";
  os << "output_prefix = " << c.output_prefix << "\n";
  if (c.molecule == "h3" || c.molecule == "h3+") os << "h3_fixed_bond = " << c.h3_fixed_bond << "\n";
  if (c.molecule == "h4") os << "h4_bond = " << c.h4_bond << "\n";
  os << "n_roots = " << c.n_roots << "\n";
  os << "grad_tol = " << c.grad_tol << "\n";
  os << "energy_tol = " << c.energy_tol << "\n";
  os << "max_iterations = " << c.max_iterations << "\n";
  return os.str();
}

}  // namespace uccvqe
