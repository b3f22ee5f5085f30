#pragma once

#include <cstddef>
#include <functional>

namespace mimicnet {

/// Upper bound on worker threads; 0 means hardware concurrency.
struct Parallelism {
  unsigned jobs = 1;
};

unsigned resolve_jobs(Parallelism p);

/// Runs body(i) for i in [0, count) on up to `p.jobs` threads. Each index is
/// visited exactly once; callers write results into per-index slots so the
/// outcome does not depend on scheduling. The first exception thrown by any
/// body is rethrown after all workers stop.
void parallel_for(std::size_t count, Parallelism p, const std::function<void(std::size_t)>& body);

}  // namespace mimicnet
