#pragma once

#include <cstddef>
#include <functional>

namespace fracmart {

// Runs fn(0), ..., fn(count-1) on up to `workers` threads. Tasks must write
// only to their own slot of a pre-sized result array; reductions happen
// after the join, in index order, so results are identical for every worker
// count. Exceptions propagate (the first one thrown wins).
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

// --workers resolution: explicit flag value if > 0, else FRACMART_WORKERS,
// else the hardware concurrency.
int resolve_workers(int requested);

}  // namespace fracmart
