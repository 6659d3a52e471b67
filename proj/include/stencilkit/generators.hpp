#ifndef STENCILKIT_GENERATORS_HPP
#define STENCILKIT_GENERATORS_HPP

#include <string>
#include <vector>

#include "stencilkit/stencil.hpp"

namespace stencilkit {

enum class StencilStyle { centered, forward, backward };

/// Request for a standard 1D derivative stencil: p-th derivative with at
/// least the requested order of accuracy (centered stencils round odd
/// requests up to the next even order).
struct StencilSpec {
  int derivative = 1;
  int accuracy = 2;
  StencilStyle style = StencilStyle::centered;
};

/// Solves the moment conditions sum_i a_i u_i^alpha / alpha! = delta_{alpha,p}
/// exactly over the smallest support window for the requested style.
Stencil make(const StencilSpec& spec);

/// d-dimensional Laplacian as the sum of per-axis second-derivative stencils;
/// the classic 5-point cross for d = 2, accuracy = 2.
Stencil laplacian(int dim, int accuracy);

/// Exact full-pivot Gaussian elimination; throws SingularSystem.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs);

StencilStyle style_from_string(const std::string& s);
const char* style_name(StencilStyle s);

}  // namespace stencilkit

#endif
