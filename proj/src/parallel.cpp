#include "hh/parallel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hh {

void run_indexed(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int i = 0; i < count; ++i) fn(i);
    return;
#endif
  }
  for (int i = 0; i < count; ++i) fn(i);
}

int hardware_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace hh
