#ifndef STENCILKIT_LINALG_HPP
#define STENCILKIT_LINALG_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "stencilkit/grid.hpp"

namespace stencilkit {

struct SolveOptions {
  double rel_tol = 1e-10;
  std::int64_t max_iter = 0;  // 0: 10 * unknown count
  bool deflate_mean = false;  // for singular periodic operators: return the mean-free solution
};

/// Conjugate gradients for symmetric positive (semi-)definite systems.
/// Guarantees ||b - M x|| <= rel_tol * ||b|| on return (true residual is
/// re-checked, not just the recurrence); throws NoConvergence otherwise.
std::vector<double> cg_solve(const CsrMatrix& m, std::span<const double> b,
                             const SolveOptions& opts = {});

/// Spectral radius by power iteration with a seeded random start and a
/// Rayleigh-quotient tail estimate as the stopping rule.
double power_iteration(const CsrMatrix& m, double tol, std::uint64_t seed = 20240801,
                       std::int64_t max_iter = 2'000'000);

/// Full spectrum of a stencil's operator on an all-periodic grid, evaluated
/// as affine_shift + affine_scale * h^h_power * symbol(2 pi k / n) over every
/// mode tuple. symbol_radius is the same quantity maximized over the
/// continuous torus (sampled + locally refined), which for coarse odd grids
/// exceeds the discrete spectral radius.
struct SpectrumReport {
  std::vector<std::complex<double>> eigenvalues;
  double spectral_radius = 0;
  double symbol_radius = 0;
  double condition_estimate = 0;  // max|lambda| / min nonzero |lambda|
};

SpectrumReport periodic_spectrum(const Stencil& s, const GridSpec& g, double affine_shift = 0.0,
                                 double affine_scale = 1.0);

/// I + alpha * M (square M).
CsrMatrix identity_plus_scaled(const CsrMatrix& m, double alpha);

/// Sparse product B * A (apply A first); used to cross-check that composing
/// stencils before assembly matches multiplying the assembled operators.
CsrMatrix csr_matmul(const CsrMatrix& b, const CsrMatrix& a);

}  // namespace stencilkit

#endif
