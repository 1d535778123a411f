#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace permuta {

inline int omp_thread_count() {
#ifdef _OPENMP
  return omp_get_num_threads();
#else
  return 1;
#endif
}

inline int omp_thread_id() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

}  // namespace permuta
