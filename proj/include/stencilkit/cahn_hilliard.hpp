#ifndef STENCILKIT_CAHN_HILLIARD_HPP
#define STENCILKIT_CAHN_HILLIARD_HPP

#include <optional>
#include <utility>
#include <vector>

#include "stencilkit/grid.hpp"
#include "stencilkit/linalg.hpp"

namespace stencilkit {

/// Spinodal-decomposition benchmark parameters (double-well chemistry).
struct CahnHilliardParams {
  double kappa = 2.0;     // gradient energy coefficient
  double mobility = 5.0;  // solute mobility M
  double rho_w = 5.0;     // double-well height
  double c_alpha = 0.3;
  double c_beta = 0.7;
  double c0 = 0.5;        // mean composition of the initial condition
  double eps_ic = 0.01;   // initial-condition perturbation amplitude
};

struct CahnHilliardState {
  GridSpec grid;
  std::vector<double> c;  // atomic fraction of solute per unknown
  double t = 0.0;
  std::vector<std::pair<double, double>> energy_history;  // (t, F)
};

/// Fills the standard trigonometric initial condition (mean approximately c0)
/// on a periodic 2D or 3D grid.
CahnHilliardState ch_init(const GridSpec& grid, const CahnHilliardParams& p);

double f_chem(double c, const CahnHilliardParams& p);
double f_chem_prime(double c, const CahnHilliardParams& p);

/// F = h^d sum [ f_chem(c) + kappa/2 |grad c|^2 ] with a centered-difference
/// gradient on the periodic grid.
double free_energy(const CahnHilliardState& s, const CahnHilliardParams& p);
double free_energy_serial(const CahnHilliardState& s, const CahnHilliardParams& p);  // reference

/// IMEX time stepper: bi-Laplacian implicit, chemistry explicit.
/// order 1: backward Euler / forward Euler splitting;
/// order 2: Crank-Nicolson on the linear term with Adams-Bashforth 2 on the
/// explicit term, bootstrapped by one order-1 step.
class CahnHilliardStepper {
 public:
  CahnHilliardStepper(const GridSpec& grid, const CahnHilliardParams& p,
                      SolveOptions solve = {.rel_tol = 1e-12});

  void step(CahnHilliardState& s, double dt, int order);

  const CsrMatrix& laplacian_matrix() const { return lap_; }
  const CsrMatrix& bilaplacian_matrix() const { return bilap_; }
  const CahnHilliardParams& params() const { return params_; }

 private:
  void ensure_implicit_matrix(double dt, int order);

  CahnHilliardParams params_;
  SolveOptions solve_;
  CsrMatrix lap_, bilap_, implicit_;
  double implicit_dt_ = 0.0;
  int implicit_order_ = 0;
  std::optional<std::vector<double>> prev_explicit_;  // M * L f'_chem at the previous step
  double prev_dt_ = 0.0;
};

void imex_step(CahnHilliardStepper& stepper, CahnHilliardState& s, double dt, int order);

}  // namespace stencilkit

#endif
