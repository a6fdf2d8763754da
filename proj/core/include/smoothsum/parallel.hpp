#pragma once

#include <cstddef>
#include <functional>

namespace smoothsum {

/// Process-wide cap on worker threads. Defaults to 1. Every parallel region
/// writes into pre-assigned slots and reduces in index order, so results do
/// not depend on this setting.
void set_max_threads(unsigned n);
unsigned max_threads();

/// Calls fn(i) for i in [0, n). Indices are split into contiguous chunks, one
/// per worker. fn must only write to state owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace smoothsum
