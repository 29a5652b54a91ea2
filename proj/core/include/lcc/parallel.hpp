#pragma once

#include <cstddef>
#include <functional>

namespace lcc {

// Run body(0..count-1) across a small worker pool. Results must be written to
// preassigned slots so the caller's reduction is an ordered (deterministic)
// pass afterwards; the helper itself guarantees only that every index runs
// exactly once. threads <= 1 runs inline. The first exception thrown by any
// body is rethrown after all workers have stopped.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace lcc
