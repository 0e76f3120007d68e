#pragma once

#include <functional>

namespace shockmetrics {

// Worker count resolution: explicit request > SHOCKMETRICS_THREADS environment
// variable > hardware concurrency (at least 1).
int resolve_threads(int requested = 0);

// Runs fn(i) for i in [0, n) across up to `threads` workers (0 = resolve from
// the environment).  Blocks until every index is done; exceptions from workers
// are rethrown on the calling thread.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

}  // namespace shockmetrics
