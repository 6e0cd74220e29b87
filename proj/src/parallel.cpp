#include "multdyn/parallel.hpp"

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace multdyn {

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void for_each_index(std::size_t count, ExecMode mode,
                    const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
#ifdef _OPENMP
  if (mode == ExecMode::parallel && count > 1) {
    std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    return;
  }
#else
  (void)mode;
#endif
  for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace multdyn
