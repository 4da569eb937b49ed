#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace gradedsusy {

// Worker count: the explicit request if given and positive, else
// GRADEDSUSY_THREADS, else the hardware concurrency (at least 1).
unsigned resolve_threads(std::optional<unsigned> requested = std::nullopt);

// Calls fn(k) for k in [0, count) on up to `threads` workers. Work is handed
// out by index, so results written to slot k are schedule-independent. The
// first exception thrown by any call is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace gradedsusy
