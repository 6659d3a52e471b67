#include "stencilkit/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace stencilkit::kernels {

void csr_matvec(const CsrMatrix& m, std::span<const double> x, std::span<double> y) {
  const auto n = m.rows;
  #pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    double acc = 0;
    for (std::int64_t k = m.row_ptr[i]; k < m.row_ptr[i + 1]; ++k)
      acc += m.values[k] * x[static_cast<size_t>(m.col_idx[k])];
    y[static_cast<size_t>(i)] = acc;
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0;
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  #pragma omp parallel for schedule(static) reduction(+ : acc)
  for (std::int64_t i = 0; i < n; ++i) acc += a[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
  return acc;
}

double nrm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double a, std::span<const double> x, std::span<double> y) {
  const std::int64_t n = static_cast<std::int64_t>(x.size());
  #pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) y[static_cast<size_t>(i)] += a * x[static_cast<size_t>(i)];
}

void xpby(std::span<const double> x, double b, std::span<double> y) {
  const std::int64_t n = static_cast<std::int64_t>(x.size());
  #pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    y[static_cast<size_t>(i)] = x[static_cast<size_t>(i)] + b * y[static_cast<size_t>(i)];
}

double sum(std::span<const double> a) {
  double acc = 0;
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  #pragma omp parallel for schedule(static) reduction(+ : acc)
  for (std::int64_t i = 0; i < n; ++i) acc += a[static_cast<size_t>(i)];
  return acc;
}

void minmax(std::span<const double> a, double& lo, double& hi) {
  double l = a[0], h = a[0];
  const std::int64_t n = static_cast<std::int64_t>(a.size());
  #pragma omp parallel for schedule(static) reduction(min : l) reduction(max : h)
  for (std::int64_t i = 0; i < n; ++i) {
    l = std::min(l, a[static_cast<size_t>(i)]);
    h = std::max(h, a[static_cast<size_t>(i)]);
  }
  lo = l;
  hi = h;
}

namespace serial {

void csr_matvec(const CsrMatrix& m, std::span<const double> x, std::span<double> y) {
  for (std::int64_t i = 0; i < m.rows; ++i) {
    double acc = 0;
    for (std::int64_t k = m.row_ptr[i]; k < m.row_ptr[i + 1]; ++k)
      acc += m.values[k] * x[static_cast<size_t>(m.col_idx[k])];
    y[static_cast<size_t>(i)] = acc;
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double nrm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double a, std::span<const double> x, std::span<double> y) {
  for (size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

void xpby(std::span<const double> x, double b, std::span<double> y) {
  for (size_t i = 0; i < x.size(); ++i) y[i] = x[i] + b * y[i];
}

double sum(std::span<const double> a) {
  double acc = 0;
  for (double v : a) acc += v;
  return acc;
}

void minmax(std::span<const double> a, double& lo, double& hi) {
  lo = hi = a[0];
  for (double v : a) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
}

}  // namespace serial

}  // namespace stencilkit::kernels
