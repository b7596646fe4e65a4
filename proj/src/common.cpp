#include "qwalk/common.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qwalk {

int effective_threads() {
#ifdef _OPENMP
  if (const char* env = std::getenv("QWALK_THREADS")) {
    try {
      int k = std::stoi(env);
      if (k > 0) return k;
    } catch (...) {
      // fall through to the OpenMP default
    }
  }
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace qwalk
