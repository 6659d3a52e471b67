#include <doctest.h>

#include <cmath>
#include <random>

#include "stencilkit/generators.hpp"
#include "stencilkit/io.hpp"
#include "stencilkit/kernels.hpp"

using namespace stencilkit;
namespace ker = kernels;

namespace {

std::vector<double> random_vec(std::mt19937_64& rng, size_t n) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = unit(rng);
  return v;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("parallel matvec matches the serial reference bit for bit") {
  GridSpec g = make_periodic_grid(2, 37, 1.0);
  CsrMatrix m = assemble(builtin_stencil("bilaplacian-2d"), g);
  std::mt19937_64 rng(99);
  std::vector<double> x = random_vec(rng, static_cast<size_t>(m.rows));
  std::vector<double> yp(x.size()), ys(x.size());
  ker::csr_matvec(m, x, yp);
  ker::serial::csr_matvec(m, x, ys);
  CHECK(yp == ys);  // same per-row accumulation order
}

TEST_CASE("elementwise kernels match the serial reference exactly") {
  std::mt19937_64 rng(7);
  std::vector<double> x = random_vec(rng, 10001), y = random_vec(rng, 10001);
  std::vector<double> y2 = y;
  ker::axpy(0.37, x, y);
  ker::serial::axpy(0.37, x, y2);
  CHECK(y == y2);
  ker::xpby(x, -1.25, y);
  ker::serial::xpby(x, -1.25, y2);
  CHECK(y == y2);
}

TEST_CASE("reductions agree with the serial reference to rounding") {
  std::mt19937_64 rng(13);
  std::vector<double> x = random_vec(rng, 50000), y = random_vec(rng, 50000);
  CHECK(ker::dot(x, y) == doctest::Approx(ker::serial::dot(x, y)).epsilon(1e-13));
  CHECK(ker::sum(x) == doctest::Approx(ker::serial::sum(x)).epsilon(1e-12));
  CHECK(ker::nrm2(x) == doctest::Approx(ker::serial::nrm2(x)).epsilon(1e-13));
  double lo1, hi1, lo2, hi2;
  ker::minmax(x, lo1, hi1);
  ker::serial::minmax(x, lo2, hi2);
  CHECK(lo1 == lo2);  // min/max are exact regardless of order
  CHECK(hi1 == hi2);
}

}  // TEST_SUITE
