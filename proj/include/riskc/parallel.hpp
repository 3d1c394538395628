#pragma once

#include <cstddef>
#include <functional>

namespace riskc {

/// Worker count from RISKC_THREADS; unset or 0 means the hardware count.
std::size_t thread_count();

/// Run body(i) for i in [begin, end) on up to thread_count() threads. Indices
/// are handed out in contiguous chunks; the first exception thrown is
/// rethrown on the calling thread after all workers stop.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& body);

}  // namespace riskc
