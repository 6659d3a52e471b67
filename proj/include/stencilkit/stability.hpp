#ifndef STENCILKIT_STABILITY_HPP
#define STENCILKIT_STABILITY_HPP

#include <complex>
#include <vector>

#include "stencilkit/stencil.hpp"

namespace stencilkit {

/// Forward-Euler von Neumann result for d/dt f = sign * (h^h_power * stencil) f:
/// the scheme is stable for dt <= alpha * h^m.
struct StabilityReport {
  int m = 0;                 // h exponent, = -h_power of the stencil
  double alpha = 0;          // stability constant
  double symbol_min = 0;     // min over theta of sign * symbol(theta)
  double argmin_theta = 0;   // extremum location in [0, 2*pi)
  int support_min = 0, support_max = 0;
};

/// Dimensionless stencil symbol sum_u c_u e^(i theta u) with the h scaling
/// factored out. 1D only.
std::complex<double> symbol(const Stencil& s, double theta);

/// Symbol of a d-dimensional stencil at per-axis angles.
std::complex<double> symbol_nd(const Stencil& s, const std::vector<double>& theta);

/// Locates the symbol extremum by dense sampling plus golden-section
/// refinement. Extra exact candidate angles (e.g. pi/2 or pi when a closed
/// form is known) are evaluated alongside the sampled grid.
StabilityReport max_stable_dt(const Stencil& s, int sign,
                              const std::vector<double>& candidate_thetas = {});

}  // namespace stencilkit

#endif
