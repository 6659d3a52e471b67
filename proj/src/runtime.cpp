#include "stencilkit/runtime.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace stencilkit {

int apply_thread_cap_from_env() {
  if (const char* env = std::getenv("STENCILKIT_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1 && cap < omp_get_max_threads()) omp_set_num_threads(cap);
    } catch (...) {
      // unparsable value: leave the OpenMP default alone
    }
  }
  return omp_get_max_threads();
}

void set_thread_count(int threads) {
  if (threads >= 1) omp_set_num_threads(threads);
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace stencilkit
