// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "uccvqe/error.hpp"
#include "uccvqe/mo_integrals.hpp"

namespace uccvqe {

namespace {

// Pulls "KEY=value" integers out of the &FCI header block; tolerates
// commas, newlines and the ORBSYM list.
int header_int(const std::string& header, const std::string& key, int fallback,
               bool required = false) {
  auto pos = header.find(key);
  while (pos != std::string::npos) {
    const bool starts_token = pos == 0 || !std::isalnum(static_cast<unsigned char>(header[pos - 1]));
    if (starts_token) {
      auto eq = header.find('=', pos + key.size());
      if (eq != std::string::npos) {
        std::istringstream is(header.substr(eq + 1));
        int value = 0;
        if (is >> value) return value;
      }
    }
    pos = header.find(key, pos + 1);
  }
  if (required) throw ParseError("FCIDUMP header lacks " + key, 1);
  return fallback;
}

}  // namespace

FcidumpData read_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open FCIDUMP file: " + path);

  std::string header;
  std::string line;
  int line_number = 0;
  bool header_done = false;
  while (!header_done && std::getline(in, line)) {
    ++line_number;
    header += line + "\n";
    const auto endpos = header.find("&END");
    const auto slashpos = header.find('/');
    if (endpos != std::string::npos || slashpos != std::string::npos) header_done = true;
  }
  if (!header_done) throw ParseError("FCIDUMP header never terminated (&END or /)", line_number);

  FcidumpData out;
  const int n_orb = header_int(header, "NORB", 0, true);
  if (n_orb <= 0) throw ParseError("NORB must be positive", 1);
  out.n_electrons = header_int(header, "NELEC", 0, true);
  out.ms2 = header_int(header, "MS2", 0);

  out.mo.n_orb = n_orb;
  out.mo.h = Eigen::MatrixXd::Zero(n_orb, n_orb);
  out.mo.g = FourIndexTensor(n_orb);

  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream is(line);
    double value;
    int i, j, k, l;
    if (!(is >> value >> i >> j >> k >> l))
      throw ParseError("malformed FCIDUMP record: " + line, line_number);
    std::string trailing;
    if (is >> trailing) throw ParseError("trailing tokens in record: " + line, line_number);
    for (int idx : {i, j, k, l})
      if (idx < 0 || idx > n_orb)
        throw ValidationError("orbital index " + std::to_string(idx) +
                              " exceeds NORB=" + std::to_string(n_orb) + " at line " +
                              std::to_string(line_number));
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      out.mo.e_nuc = value;
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // orbital-energy record; not used
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      out.mo.h(i - 1, j - 1) = value;
      out.mo.h(j - 1, i - 1) = value;
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      out.mo.g.set_symmetric(i - 1, j - 1, k - 1, l - 1, value);
    } else {
      throw ParseError("mixed zero/nonzero indices in record: " + line, line_number);
    }
  }
  out.mo.validate();
  return out;
}

void write_fcidump(const MOIntegrals& mo, int n_electrons, int ms2, const std::string& path) {
  std::ofstream outf(path);
  if (!outf) throw Error("cannot write FCIDUMP file: " + path);
  outf << "&FCI NORB=" << mo.n_orb << ",NELEC=" << n_electrons << ",MS2=" << ms2 << ",\n";
  outf << " ORBSYM=";
  for (int p = 0; p < mo.n_orb; ++p) outf << "1,";
  outf << "\n ISYM=1,\n&END\n";

  outf.precision(17);
  const int n = mo.n_orb;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= (r == p ? q : r); ++s) {
          const double v = mo.g(p, q, r, s);
          if (v != 0.0)
            outf << " " << v << " " << p + 1 << " " << q + 1 << " " << r + 1 << " " << s + 1
                 << "\n";
        }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      if (mo.h(p, q) != 0.0) outf << " " << mo.h(p, q) << " " << p + 1 << " " << q + 1 << " 0 0\n";
  // e_core is folded into the scalar record so a round trip preserves spectra.
  outf << " " << mo.e_nuc + mo.e_core << " 0 0 0 0\n";
}

}  // namespace uccvqe
