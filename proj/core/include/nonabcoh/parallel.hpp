#pragma once

#include <functional>
#include <vector>

namespace nonabcoh {

/// Parallelism cap: NONABCOH_THREADS when set (>= 1), otherwise the
/// hardware concurrency.
int thread_cap();

/// Runs the tasks, concurrently when the cap allows; results land in task
/// order so output stays deterministic.
void run_tasks(std::vector<std::function<void()>> tasks);

} // namespace nonabcoh
