#ifndef STENCILKIT_RUNTIME_HPP
#define STENCILKIT_RUNTIME_HPP

namespace stencilkit {

/// Caps OpenMP parallelism at STENCILKIT_THREADS when the variable is set.
/// Returns the thread count in effect afterwards.
int apply_thread_cap_from_env();

void set_thread_count(int threads);
int thread_count();

}  // namespace stencilkit

#endif
