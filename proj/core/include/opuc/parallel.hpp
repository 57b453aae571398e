#pragma once

#include <cstddef>
#include <functional>

namespace opuc {

// Worker count: OPUC_THREADS if set and positive, else hardware concurrency.
int thread_count();

// Runs body(i) for i in [0, n). Each index is visited exactly once; results
// must be written to disjoint slots so the outcome is independent of the
// thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace opuc
