// Timing comparison of the OpenMP kernels against their serial references:
// CSR mat-vec on the assembled 2D bi-Laplacian plus the dense vector kernels.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "stencilkit/generators.hpp"
#include "stencilkit/grid.hpp"
#include "stencilkit/kernels.hpp"
#include "stencilkit/runtime.hpp"

namespace sk = stencilkit;
namespace ker = sk::kernels;
using clk = std::chrono::steady_clock;

namespace {

template <typename F>
double time_best_of(int reps, F&& fn) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = clk::now();
    fn();
    auto t1 = clk::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main() {
  const int threads = sk::apply_thread_cap_from_env();
  std::printf("threads: %d\n", threads);
  std::printf("%-22s %10s %12s %12s %8s\n", "kernel", "n", "serial [s]", "openmp [s]", "speedup");

  const sk::Stencil lap = sk::laplacian(2, 2);
  const sk::Stencil bilap = sk::compose(lap, lap);

  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  for (int n : {100, 200, 400}) {
    sk::GridSpec g = sk::make_periodic_grid(2, n, 1.0);
    sk::CsrMatrix m = sk::assemble(bilap, g);
    std::vector<double> x(static_cast<size_t>(m.rows)), y(x.size());
    for (auto& v : x) v = unit(rng);

    const int reps = 20;
    double ts = time_best_of(reps, [&] { ker::serial::csr_matvec(m, x, y); });
    double tp = time_best_of(reps, [&] { ker::csr_matvec(m, x, y); });
    std::printf("%-22s %10lld %12.3e %12.3e %8.2f\n", "csr_matvec(bilap)",
                static_cast<long long>(m.rows), ts, tp, ts / tp);
  }

  for (size_t n : {1u << 16, 1u << 20, 1u << 22}) {
    std::vector<double> a(n), b(n);
    for (auto& v : a) v = unit(rng);
    for (auto& v : b) v = unit(rng);

    const int reps = 20;
    double ts = time_best_of(reps, [&] { volatile double s = ker::serial::dot(a, b); (void)s; });
    double tp = time_best_of(reps, [&] { volatile double s = ker::dot(a, b); (void)s; });
    std::printf("%-22s %10zu %12.3e %12.3e %8.2f\n", "dot", n, ts, tp, ts / tp);

    ts = time_best_of(reps, [&] { ker::serial::axpy(0.5, a, b); });
    tp = time_best_of(reps, [&] { ker::axpy(0.5, a, b); });
    std::printf("%-22s %10zu %12.3e %12.3e %8.2f\n", "axpy", n, ts, tp, ts / tp);

    ts = time_best_of(reps, [&] { volatile double s = ker::serial::sum(a); (void)s; });
    tp = time_best_of(reps, [&] { volatile double s = ker::sum(a); (void)s; });
    std::printf("%-22s %10zu %12.3e %12.3e %8.2f\n", "sum", n, ts, tp, ts / tp);
  }
  return 0;
}
