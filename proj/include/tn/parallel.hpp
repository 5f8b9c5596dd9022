#pragma once

#include <functional>

namespace tn {

// Worker count: TORELLI_THREADS if set (clamped to >= 1), else the
// hardware concurrency.
int thread_count();

// Run body(i) for i in [0, n); work is distributed across thread_count()
// threads.  Bodies must not touch shared state without their own locking.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace tn
