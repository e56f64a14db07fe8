#pragma once

#include <cstddef>
#include <exception>

namespace eulerform {

/// OpenMP loop over [0, count) whose body may throw. An exception cannot
/// leave a parallel region, so the first one is kept and rethrown afterwards.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (std::size_t q = 0; q < count; ++q) {
    try {
      body(q);
    } catch (...) {
#pragma omp critical(eulerform_parallel_for)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace eulerform
