// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#include "uccvqe/second_quantization.hpp"

namespace uccvqe {

FermionOperator hamiltonian_operator(const MOIntegrals& mo) {
  mo.validate();
  const int n_so = 2 * mo.n_orb;
  FermionOperator h;
  h.add_term({}, mo.constant());

  for (int p = 0; p < n_so; ++p)
    for (int q = 0; q < n_so; ++q) {
      if (is_beta(p) != is_beta(q)) continue;
      const double v = mo.h(spatial_of(p), spatial_of(q));
      if (v != 0.0) h.add_term({{p, true}, {q, false}}, v);
    }

  // 1/2 sum_pqrs <pq|rs> a†_p a†_q a_s a_r with <pq|rs> = (pr|qs) and
  // spin conservation p~r, q~s.
  for (int p = 0; p < n_so; ++p)
    for (int q = 0; q < n_so; ++q) {
      if (p == q) continue;
      for (int r = 0; r < n_so; ++r) {
        if (is_beta(p) != is_beta(r)) continue;
        for (int s = 0; s < n_so; ++s) {
          if (s == r) continue;
          if (is_beta(q) != is_beta(s)) continue;
          const double v = mo.g(spatial_of(p), spatial_of(r), spatial_of(q), spatial_of(s));
          if (v == 0.0) continue;
          h.add_term({{p, true}, {q, true}, {s, false}, {r, false}}, 0.5 * v);
        }
      }
    }
  return h;
}

FermionOperator number_operator(int n_spatial) {
  FermionOperator n;
  for (int m = 0; m < 2 * n_spatial; ++m) n.add_term({{m, true}, {m, false}}, 1.0);
  return n;
}

FermionOperator sz_operator(int n_spatial) {
  FermionOperator sz;
  for (int p = 0; p < n_spatial; ++p) {
    sz.add_term({{alpha_of(p), true}, {alpha_of(p), false}}, 0.5);
    sz.add_term({{beta_of(p), true}, {beta_of(p), false}}, -0.5);
  }
  return sz;
}

FermionOperator s_plus_operator(int n_spatial) {
  FermionOperator sp;
  for (int p = 0; p < n_spatial; ++p) sp.add_term({{alpha_of(p), true}, {beta_of(p), false}}, 1.0);
  return sp;
}

FermionOperator s2_operator(int n_spatial) {
  const FermionOperator sp = s_plus_operator(n_spatial);
  const FermionOperator sm = sp.adjoint();
  const FermionOperator sz = sz_operator(n_spatial);
  FermionOperator identity = FermionOperator::term(LadderProduct{}, 1.0);
  FermionOperator s2 = sm * sp + sz * (sz + identity);
  return s2.normal_ordered();
}

}  // namespace uccvqe
