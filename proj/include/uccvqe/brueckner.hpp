// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "uccvqe/fci.hpp"
#include "uccvqe/statevector.hpp"

namespace uccvqe {

/// Reference determinant dressed with the FCI singles: normalized
/// exp(T1) |HF>, with T1 amplitudes read off the chosen FCI root by
/// intermediate normalization (c_singles / c_HF). Throws
/// ReferenceDominationError when |c_HF| < 1e-6.
Statevector brueckner_reference(const FCISolution& fci, int root, const Determinant& hf_det);

}  // namespace uccvqe
