#ifndef STENCILKIT_KERNELS_HPP
#define STENCILKIT_KERNELS_HPP

#include <span>

#include "stencilkit/grid.hpp"

// Data-parallel kernels (OpenMP). Each has a serial reference twin under
// kernels::serial used by the tests and the benchmark; the parallel versions
// are the ones wired into the solvers.

namespace stencilkit::kernels {

void csr_matvec(const CsrMatrix& m, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> a, std::span<const double> b);
double nrm2(std::span<const double> a);
void axpy(double a, std::span<const double> x, std::span<double> y);           // y += a x
void xpby(std::span<const double> x, double b, std::span<double> y);           // y = x + b y
double sum(std::span<const double> a);
void minmax(std::span<const double> a, double& lo, double& hi);

namespace serial {
void csr_matvec(const CsrMatrix& m, std::span<const double> x, std::span<double> y);
double dot(std::span<const double> a, std::span<const double> b);
double nrm2(std::span<const double> a);
void axpy(double a, std::span<const double> x, std::span<double> y);
void xpby(std::span<const double> x, double b, std::span<double> y);
double sum(std::span<const double> a);
void minmax(std::span<const double> a, double& lo, double& hi);
}  // namespace serial

}  // namespace stencilkit::kernels

#endif
