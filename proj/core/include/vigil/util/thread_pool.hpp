#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace vigil {

// Runs jobs[i] on up to `workers` threads and joins them all before
// returning. Phase barriers in the pipeline want exactly this fork/join
// shape; a persistent queue would buy nothing.
void run_parallel(std::size_t workers, std::vector<std::function<void()>> jobs);

}  // namespace vigil
