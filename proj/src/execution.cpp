#include "alterlda/execution.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace alterlda {

int max_threads() noexcept {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace alterlda
