#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "stencilkit/generators.hpp"
#include "stencilkit/io.hpp"
#include "stencilkit/kernels.hpp"
#include "stencilkit/linalg.hpp"
#include "stencilkit/stability.hpp"

using namespace stencilkit;
using std::numbers::pi;

TEST_SUITE("linalg") {

TEST_CASE("cg on the identity returns the rhs") {
  GridSpec g = make_periodic_grid(1, 32, 1.0);
  CsrMatrix eye = assemble(Stencil::identity(1), g);
  std::mt19937 rng(3);
  std::vector<double> b(32);
  for (auto& v : b) v = std::uniform_real_distribution<double>(-2, 2)(rng);
  std::vector<double> x = cg_solve(eye, b);
  for (size_t i = 0; i < b.size(); ++i) CHECK(x[i] == doctest::Approx(b[i]).epsilon(1e-12));
}

TEST_CASE("1D periodic Poisson: sine modes scale by one over the symbol") {
  const int n = 64;
  const double h = 1.0 / n;
  GridSpec g = make_periodic_grid(1, n, h);
  const Stencil d2 = make({.derivative = 2, .accuracy = 2});
  // negate so the singular operator is positive semi-definite
  CsrMatrix neg_lap = assemble(scale(d2, Rational(-1)), g);

  const int mode = 3;
  const double theta = 2 * pi * mode / n;
  const double lambda = -symbol(d2, theta).real() / (h * h);
  std::vector<double> b(n);
  for (int i = 0; i < n; ++i) b[static_cast<size_t>(i)] = std::sin(theta * i);  // zero mean

  std::vector<double> x = cg_solve(neg_lap, b, {.rel_tol = 1e-12, .deflate_mean = true});
  double mean = 0;
  for (double v : x) mean += v;
  CHECK(std::abs(mean) <= 1e-12 * n);
  for (int i = 0; i < n; ++i)
    CHECK(x[static_cast<size_t>(i)] ==
          doctest::Approx(b[static_cast<size_t>(i)] / lambda).epsilon(1e-9));

  // solver contract: true residual meets the tolerance
  std::vector<double> mx(static_cast<size_t>(n));
  kernels::csr_matvec(neg_lap, x, mx);
  double r = 0, bn = 0;
  for (int i = 0; i < n; ++i) {
    r += (b[static_cast<size_t>(i)] - mx[static_cast<size_t>(i)]) * (b[static_cast<size_t>(i)] - mx[static_cast<size_t>(i)]);
    bn += b[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
  }
  CHECK(std::sqrt(r) <= 1e-12 * std::sqrt(bn));
}

TEST_CASE("cg reports failures") {
  GridSpec g = make_periodic_grid(1, 16, 1.0);
  // the raw Laplacian is negative semi-definite: CG must refuse
  CsrMatrix lap = assemble(make({.derivative = 2, .accuracy = 2}), g);
  std::vector<double> b(16, 0.0);
  b[3] = 1.0;
  b[7] = -1.0;
  CHECK_THROWS_AS(cg_solve(lap, b), Error);

  CsrMatrix neg = assemble(scale(make({.derivative = 2, .accuracy = 2}), Rational(-1)), g);
  CHECK_THROWS_AS(cg_solve(neg, b, {.rel_tol = 1e-14, .max_iter = 2}), Error);
}

TEST_CASE("power iteration: identity and small bi-Laplacian") {
  GridSpec g = make_periodic_grid(2, 8, 1.0);
  CsrMatrix eye = assemble(Stencil::identity(2), g);
  CHECK(power_iteration(eye, 1e-10) == doctest::Approx(1.0).epsilon(1e-9));

  GridSpec g20 = make_periodic_grid(2, 20, 10.0);
  CsrMatrix bilap = assemble(builtin_stencil("bilaplacian-2d"), g20);
  SpectrumReport rep = periodic_spectrum(builtin_stencil("bilaplacian-2d"), g20);
  const double rho = power_iteration(bilap, 1e-8);
  CHECK(rho == doctest::Approx(rep.spectral_radius).epsilon(1e-6));
}

TEST_CASE("periodic spectrum: symbol extremes of the 1D Laplacian") {
  GridSpec g = make_periodic_grid(1, 4, 0.5);
  SpectrumReport rep = periodic_spectrum(make({.derivative = 2, .accuracy = 2}), g);
  REQUIRE(rep.eigenvalues.size() == 4);
  // modes theta = 0, pi/2, pi, 3pi/2 -> 0, -2/h^2, -4/h^2, -2/h^2
  CHECK(rep.eigenvalues[0].real() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(rep.eigenvalues[1].real() == doctest::Approx(-8.0).epsilon(1e-13));
  CHECK(rep.eigenvalues[2].real() == doctest::Approx(-16.0).epsilon(1e-13));
  CHECK(rep.spectral_radius == doctest::Approx(16.0).epsilon(1e-13));
}

TEST_CASE("spectrum requires periodic axes") {
  GridSpec g;
  g.dim = 1;
  g.n = {8};
  g.h = 1.0;
  g.origin = {0.0};
  g.bc = {BoundaryKind::simply_supported};
  CHECK_THROWS_AS(periodic_spectrum(Stencil::identity(1), g), Error);
}

TEST_CASE("time-stepping table rows: spectral radius and condition number") {
  const Stencil bilap = builtin_stencil("bilaplacian-2d");
  struct Row {
    double h, dt, rho, rho_step;
  };
  // domain [0, 200]^2; the h = 8 grid is odd (25 points) so its discrete
  // radius sits below the symbol supremum; all other rows match exactly
  const std::vector<Row> rows = {{8, 2, 0.015625, 1.03125},
                                 {4, 1, 0.25, 1.25},
                                 {2, 0.5, 4.0, 3.0},
                                 {1, 0.25, 64.0, 17.0}};
  for (const auto& row : rows) {
    const int n = static_cast<int>(200.0 / row.h);
    GridSpec g = make_periodic_grid(2, n, row.h);

    SpectrumReport b = periodic_spectrum(bilap, g);
    CHECK(b.symbol_radius == row.rho);  // exact dyadic rationals
    if (n % 2 == 0) CHECK(b.spectral_radius == row.rho);

    SpectrumReport step = periodic_spectrum(bilap, g, 1.0, row.dt);
    CHECK(step.symbol_radius == row.rho_step);
    if (n % 2 == 0) {
      CHECK(step.spectral_radius == row.rho_step);
      CHECK(step.condition_estimate == row.rho_step);  // min eigenvalue is the constant mode's 1
    }

    // bi-Laplacian eigenvalues are real and non-negative
    for (const auto& ev : b.eigenvalues) {
      CHECK(ev.imag() == 0.0);
      CHECK(ev.real() >= -1e-13);
    }
  }

  // the odd h = 8 grid: paper's printed 0.0155 is the exact discrete radius
  GridSpec g25 = make_periodic_grid(2, 25, 8.0);
  SpectrumReport b25 = periodic_spectrum(bilap, g25);
  CHECK(b25.spectral_radius == doctest::Approx(0.0155018).epsilon(1e-4));
  CHECK(b25.spectral_radius < b25.symbol_radius);
}

TEST_CASE("identity_plus_scaled and csr_matmul agree with dense arithmetic") {
  GridSpec g = make_periodic_grid(1, 8, 1.0);
  CsrMatrix lap = assemble(make({.derivative = 2, .accuracy = 2}), g);
  CsrMatrix shifted = identity_plus_scaled(lap, 0.5);
  // dense check
  auto dense = [](const CsrMatrix& m) {
    std::vector<std::vector<double>> d(static_cast<size_t>(m.rows),
                                       std::vector<double>(static_cast<size_t>(m.cols), 0.0));
    for (std::int64_t i = 0; i < m.rows; ++i)
      for (std::int64_t k = m.row_ptr[static_cast<size_t>(i)]; k < m.row_ptr[static_cast<size_t>(i) + 1]; ++k)
        d[static_cast<size_t>(i)][static_cast<size_t>(m.col_idx[static_cast<size_t>(k)])] =
            m.values[static_cast<size_t>(k)];
    return d;
  };
  auto dl = dense(lap), ds = dense(shifted);
  for (size_t i = 0; i < dl.size(); ++i)
    for (size_t j = 0; j < dl.size(); ++j)
      CHECK(ds[i][j] == doctest::Approx(0.5 * dl[i][j] + (i == j ? 1.0 : 0.0)).epsilon(1e-15));

  CsrMatrix prod = csr_matmul(lap, lap);
  auto dp = dense(prod);
  for (size_t i = 0; i < dl.size(); ++i)
    for (size_t j = 0; j < dl.size(); ++j) {
      double acc = 0;
      for (size_t k = 0; k < dl.size(); ++k) acc += dl[i][k] * dl[k][j];
      CHECK(dp[i][j] == doctest::Approx(acc).epsilon(1e-14));
    }
}

}  // TEST_SUITE
