#pragma once

#include <cstdint>
#include <exception>
#include <utility>

namespace geofrechet {

// OpenMP parallel-for over [0, n) with exception capture; the first exception
// thrown by any worker is rethrown on the calling thread after the join.
template <typename Fn>
void parallel_for(std::int64_t n, Fn&& fn) {
  std::exception_ptr err = nullptr;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical(geofrechet_parallel_for_err)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace geofrechet
