#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "stencilkit/generators.hpp"
#include "stencilkit/io.hpp"
#include "stencilkit/linalg.hpp"
#include "stencilkit/stability.hpp"
#include "test_util.hpp"

using namespace stencilkit;
using testutil::random_stencil;
using std::numbers::pi;

namespace {

GridSpec ss_grid_2d(int points_per_axis, double h) {
  GridSpec g;
  g.dim = 2;
  g.n = {points_per_axis, points_per_axis};
  g.h = h;
  g.origin = {0.0, 0.0};
  g.bc = {BoundaryKind::simply_supported, BoundaryKind::simply_supported};
  return g;
}

bool csr_close(const CsrMatrix& a, const CsrMatrix& b, double rel) {
  if (a.rows != b.rows || a.cols != b.cols || a.nnz() != b.nnz()) return false;
  if (a.row_ptr != b.row_ptr || a.col_idx != b.col_idx) return false;
  double scale = 0;
  for (double v : a.values) scale = std::max(scale, std::abs(v));
  for (size_t k = 0; k < a.values.size(); ++k)
    if (std::abs(a.values[k] - b.values[k]) > rel * scale) return false;
  return true;
}

}  // namespace

TEST_SUITE("grid_assembly") {

TEST_CASE("identity stencil assembles to the identity matrix") {
  for (auto bc : {BoundaryKind::periodic, BoundaryKind::simply_supported}) {
    GridSpec g;
    g.dim = 2;
    g.n = {7, 6};
    g.h = 0.5;
    g.origin = {0, 0};
    g.bc = {bc, bc};
    CsrMatrix m = assemble(Stencil::identity(2), g);
    CHECK(m.nnz() == m.rows);
    for (std::int64_t i = 0; i < m.rows; ++i) {
      CHECK(m.col_idx[static_cast<size_t>(i)] == i);
      CHECK(m.values[static_cast<size_t>(i)] == 1.0);
    }
  }
}

TEST_CASE("periodic Laplacian: five entries per row summing to zero") {
  GridSpec g = make_periodic_grid(2, 25, 8.0);
  CsrMatrix m = assemble(laplacian(2, 2), g);
  CHECK(m.rows == 625);
  CHECK(m.nnz() == 3125);  // 5 per row
  double max_val = 0;
  for (double v : m.values) max_val = std::max(max_val, std::abs(v));
  for (std::int64_t i = 0; i < m.rows; ++i) {
    CHECK(m.row_ptr[static_cast<size_t>(i) + 1] - m.row_ptr[static_cast<size_t>(i)] == 5);
    double row_sum = 0;
    for (std::int64_t k = m.row_ptr[static_cast<size_t>(i)]; k < m.row_ptr[static_cast<size_t>(i) + 1]; ++k)
      row_sum += m.values[static_cast<size_t>(k)];
    CHECK(std::abs(row_sum) <= 1e-14 * max_val);
  }
}

TEST_CASE("sparsity table: nnz counts and fill percentages") {
  const Stencil lap = laplacian(2, 2);
  const Stencil bilap = compose(lap, lap);
  const double extent = 200.0;
  const std::vector<double> ladder = {8, 4, 2};  // larger grids covered by the acceptance suite
  const std::vector<std::int64_t> sizes = {625, 2500, 10000};
  const std::vector<double> lap_pct = {0.8, 0.2, 0.05};
  const std::vector<double> bilap_pct = {2.08, 0.52, 0.13};
  for (size_t i = 0; i < ladder.size(); ++i) {
    GridSpec g = make_periodic_grid(2, static_cast<int>(extent / ladder[i]), ladder[i]);
    auto [nnz_l, pct_l] = sparsity_report(assemble(lap, g));
    auto [nnz_b, pct_b] = sparsity_report(assemble(bilap, g));
    CHECK(g.unknown_count() == sizes[i]);
    CHECK(nnz_l == 5 * sizes[i]);
    CHECK(nnz_b == 13 * sizes[i]);
    CHECK(pct_l == lap_pct[i]);
    CHECK(pct_b == bilap_pct[i]);
    CHECK(13 * nnz_l == 5 * nnz_b);  // 5:13 exactly, every grid
  }
}

TEST_CASE("apply: constants, identity, and shape checks") {
  GridSpec g = make_periodic_grid(2, 16, 1.0);
  CsrMatrix lap = assemble(laplacian(2, 2), g);
  std::vector<double> ones(static_cast<size_t>(lap.rows), 3.25);
  for (double v : stencilkit::apply(lap, ones)) CHECK(std::abs(v) <= 1e-13);

  CsrMatrix eye = assemble(Stencil::identity(2), g);
  std::mt19937 rng(5);
  std::vector<double> x(static_cast<size_t>(eye.rows));
  for (auto& v : x) v = std::uniform_real_distribution<double>(-1, 1)(rng);
  CHECK(stencilkit::apply(eye, x) == x);

  std::vector<double> wrong(static_cast<size_t>(eye.rows) + 1);
  CHECK_THROWS_AS(stencilkit::apply(eye, wrong), Error);
}

TEST_CASE("apply: centered second derivative acts as its symbol on a sine mode") {
  const int n = 64;
  const double h = 1.0 / n;
  GridSpec g = make_periodic_grid(1, n, h);
  CsrMatrix m = assemble(make({.derivative = 2, .accuracy = 2}), g);

  const double theta = 2 * pi * h;  // one full period across [0, 1)
  const double lambda = symbol(make({.derivative = 2, .accuracy = 2}), theta).real() / (h * h);
  std::vector<double> v(n), want(n);
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = std::sin(2 * pi * g.coordinate(0, i));
  std::vector<double> got = stencilkit::apply(m, v);
  for (int i = 0; i < n; ++i) {
    CHECK(std::abs(got[static_cast<size_t>(i)] - lambda * v[static_cast<size_t>(i)]) <=
          1e-12 * std::abs(lambda));
    // second-order agreement with the continuous operator -(2 pi)^2 sin
    CHECK(std::abs(got[static_cast<size_t>(i)] + 4 * pi * pi * v[static_cast<size_t>(i)]) <=
          50.0 * h * h + 1e-10);
  }
}

TEST_CASE("composing before assembly matches multiplying assembled operators") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 8; ++trial) {
    const int dim = 1 + trial % 2;
    Stencil a = random_stencil(rng, dim, 2), b = random_stencil(rng, dim, 2);
    GridSpec g = make_periodic_grid(dim, 11, 0.5);
    CsrMatrix product = csr_matmul(assemble(b, g), assemble(a, g));
    CsrMatrix direct = assemble(compose(a, b), g);
    CHECK(csr_close(direct, product, 1e-13));
  }
}

TEST_CASE("periodic eigenvectors: Fourier modes map through the symbol") {
  const int n = 16;
  GridSpec g = make_periodic_grid(2, n, 2.0);
  const Stencil lap = laplacian(2, 2);
  CsrMatrix m = assemble(lap, g);
  for (int kx : {0, 1, 5}) {
    for (int ky : {0, 3}) {
      const double tx = 2 * pi * kx / n, ty = 2 * pi * ky / n;
      const double lambda = symbol_nd(lap, {tx, ty}).real() / (g.h * g.h);
      std::vector<double> v(static_cast<size_t>(n) * n);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
          v[static_cast<size_t>(j * n + i)] = std::cos(tx * i + ty * j);
      std::vector<double> got = stencilkit::apply(m, v);
      for (size_t i = 0; i < v.size(); ++i)
        CHECK(std::abs(got[i] - lambda * v[i]) <= 1e-10 * (std::abs(lambda) + 1.0));
    }
  }
}

TEST_CASE("simply-supported: odd reflection squares the Dirichlet Laplacian") {
  GridSpec g = ss_grid_2d(17, 1.0 / 16);
  const Stencil lap = laplacian(2, 2);
  CsrMatrix lap_d = assemble(lap, g);
  CsrMatrix direct = assemble(compose(lap, lap), g);
  CsrMatrix squared = csr_matmul(lap_d, lap_d);
  CHECK(csr_close(direct, squared, 1e-13));
}

TEST_CASE("simply-supported 1D second derivative is the Dirichlet tridiagonal") {
  GridSpec g;
  g.dim = 1;
  g.n = {6};
  g.h = 1.0;
  g.origin = {0.0};
  g.bc = {BoundaryKind::simply_supported};
  CsrMatrix m = assemble(make({.derivative = 2, .accuracy = 2}), g);
  CHECK(m.rows == 4);
  CHECK(m.nnz() == 4 + 2 * 3);
  for (std::int64_t i = 0; i < m.rows; ++i)
    for (std::int64_t k = m.row_ptr[static_cast<size_t>(i)]; k < m.row_ptr[static_cast<size_t>(i) + 1]; ++k)
      CHECK(m.values[static_cast<size_t>(k)] == (m.col_idx[static_cast<size_t>(k)] == i ? -2.0 : 1.0));
}

TEST_CASE("stencil wider than the grid is rejected") {
  Stencil wide = compose(builtin_stencil("dxx-dxx"), builtin_stencil("dxx-dxx"));  // support 8
  CHECK_THROWS_AS(assemble(wide, make_periodic_grid(1, 8, 1.0)), Error);

  GridSpec g;
  g.dim = 1;
  g.n = {3};
  g.h = 1.0;
  g.origin = {0.0};
  g.bc = {BoundaryKind::simply_supported};
  CHECK_THROWS_AS(assemble(builtin_stencil("wide-heat"), g), Error);  // needs |offset| <= n-2
}

TEST_CASE("grid validation") {
  GridSpec g;
  g.dim = 2;
  g.n = {4};  // wrong length
  g.h = 1;
  g.origin = {0, 0};
  g.bc = {BoundaryKind::periodic, BoundaryKind::periodic};
  CHECK_THROWS_AS(g.validate(), Error);
  CHECK_THROWS_AS(make_periodic_grid(1, 2, 1.0), Error);  // too few points
  CHECK_THROWS_AS(assemble(Stencil::identity(2), make_periodic_grid(1, 8, 1.0)), Error);
}

}  // TEST_SUITE
