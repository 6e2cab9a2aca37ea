#pragma once

#include <cstddef>
#include <functional>

namespace helixwake {

/// Worker count: HELIXWAKE_THREADS if set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned configured_threads();

/// Calls fn(i) for i in [0, n) on up to `threads` workers. Exceptions escape
/// fn only through the caller's own capture; fn must not throw.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace helixwake
