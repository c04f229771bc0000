// Indexed parallel-for used by product tables and fuzz loops. Workers write
// to disjoint, preallocated slots, so results are identical at any job count;
// jobs <= 1 runs the plain serial loop (the reference path used in tests).

#pragma once

#include <functional>

namespace hh {

void run_indexed(int count, int jobs, const std::function<void(int)>& fn);

// OpenMP's notion of available parallelism; 1 when built without it.
int hardware_jobs();

}  // namespace hh
