// Copyright 2026 The uccvqe Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace uccvqe {

/// Worker count: UCCVQE_WORKERS env override, else hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, n); each index is executed exactly once and
/// writes only its own slot, so results are thread-count independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace uccvqe
