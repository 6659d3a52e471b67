#include "stencilkit/cahn_hilliard.hpp"

#include <cmath>

#include "stencilkit/generators.hpp"
#include "stencilkit/kernels.hpp"

namespace stencilkit {

namespace {

void require_periodic(const GridSpec& g) {
  for (auto bc : g.bc)
    if (bc != BoundaryKind::periodic)
      throw Error(Errc::non_periodic, "Cahn-Hilliard runs on periodic grids");
}

}  // namespace

CahnHilliardState ch_init(const GridSpec& grid, const CahnHilliardParams& p) {
  grid.validate();
  require_periodic(grid);
  if (grid.dim != 2 && grid.dim != 3)
    throw Error(Errc::invalid_argument, "initial condition is defined for 2D and 3D");

  CahnHilliardState s;
  s.grid = grid;
  s.c.resize(static_cast<size_t>(grid.unknown_count()));
  const double c0 = p.c0, eps = p.eps_ic;

  if (grid.dim == 2) {
    const int nx = grid.n[0], ny = grid.n[1];
    #pragma omp parallel for schedule(static)
    for (std::int64_t j = 0; j < ny; ++j) {
      const double y = grid.coordinate(1, static_cast<int>(j));
      for (std::int64_t i = 0; i < nx; ++i) {
        const double x = grid.coordinate(0, static_cast<int>(i));
        const double c2 = std::cos(0.13 * x) * std::cos(0.087 * y);
        s.c[static_cast<size_t>(j * nx + i)] =
            c0 + eps * (std::cos(0.105 * x) * std::cos(0.11 * y) + c2 * c2 +
                        std::cos(0.025 * x - 0.15 * y) * std::cos(0.07 * x - 0.02 * y));
      }
    }
  } else {
    const int nx = grid.n[0], ny = grid.n[1], nz = grid.n[2];
    #pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < nz; ++k) {
      const double z = grid.coordinate(2, static_cast<int>(k));
      for (std::int64_t j = 0; j < ny; ++j) {
        const double y = grid.coordinate(1, static_cast<int>(j));
        for (std::int64_t i = 0; i < nx; ++i) {
          const double x = grid.coordinate(0, static_cast<int>(i));
          const double c2 = std::cos(0.13 * x) * std::cos(0.087 * y) * std::cos(0.1 * z);
          s.c[static_cast<size_t>((k * ny + j) * nx + i)] =
              c0 + eps * (std::cos(0.105 * x) * std::cos(0.11 * y) * std::cos(0.11 * z) + c2 * c2 +
                          std::cos(0.025 * x - 0.15 * y - 0.1 * z) *
                              std::cos(0.07 * x - 0.02 * y + 0.01 * z));
        }
      }
    }
  }
  return s;
}

double f_chem(double c, const CahnHilliardParams& p) {
  const double a = c - p.c_alpha, b = c - p.c_beta;
  return p.rho_w * a * a * b * b;
}

double f_chem_prime(double c, const CahnHilliardParams& p) {
  const double a = c - p.c_alpha, b = c - p.c_beta;
  return 2.0 * p.rho_w * a * b * (2.0 * c - p.c_alpha - p.c_beta);
}

namespace {

template <bool Parallel>
double energy_impl(const CahnHilliardState& s, const CahnHilliardParams& p) {
  const GridSpec& g = s.grid;
  const double inv_2h = 0.5 / g.h;
  const std::int64_t count = static_cast<std::int64_t>(s.c.size());

  std::vector<std::int64_t> stride(static_cast<size_t>(g.dim));
  std::int64_t acc_stride = 1;
  for (int a = 0; a < g.dim; ++a) {
    stride[static_cast<size_t>(a)] = acc_stride;
    acc_stride *= g.n[static_cast<size_t>(a)];
  }

  double total = 0;
  #pragma omp parallel for schedule(static) reduction(+ : total) if (Parallel)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    double cell = f_chem(s.c[static_cast<size_t>(idx)], p);
    std::int64_t rem = idx;
    for (int a = 0; a < g.dim; ++a) {
      const int na = g.n[static_cast<size_t>(a)];
      const int ia = static_cast<int>(rem % na);
      rem /= na;
      const std::int64_t up = idx + stride[static_cast<size_t>(a)] * ((ia + 1 == na) ? 1 - na : 1);
      const std::int64_t dn = idx - stride[static_cast<size_t>(a)] * ((ia == 0) ? 1 - na : 1);
      const double grad = (s.c[static_cast<size_t>(up)] - s.c[static_cast<size_t>(dn)]) * inv_2h;
      cell += 0.5 * p.kappa * grad * grad;
    }
    total += cell;
  }
  return total * pow_int(g.h, g.dim);
}

}  // namespace

double free_energy(const CahnHilliardState& s, const CahnHilliardParams& p) {
  require_periodic(s.grid);
  return energy_impl<true>(s, p);
}

double free_energy_serial(const CahnHilliardState& s, const CahnHilliardParams& p) {
  require_periodic(s.grid);
  return energy_impl<false>(s, p);
}

CahnHilliardStepper::CahnHilliardStepper(const GridSpec& grid, const CahnHilliardParams& p,
                                         SolveOptions solve)
    : params_(p), solve_(solve) {
  grid.validate();
  require_periodic(grid);
  Stencil lap = laplacian(grid.dim, 2);
  lap_ = assemble(lap, grid);
  bilap_ = assemble(compose(lap, lap), grid);
}

void CahnHilliardStepper::ensure_implicit_matrix(double dt, int order) {
  const double factor = dt * params_.mobility * params_.kappa * (order == 2 ? 0.5 : 1.0);
  if (implicit_dt_ == factor && implicit_order_ == order) return;
  implicit_ = identity_plus_scaled(bilap_, factor);
  implicit_dt_ = factor;
  implicit_order_ = order;
}

void CahnHilliardStepper::step(CahnHilliardState& s, double dt, int order) {
  if (order != 1 && order != 2) throw Error(Errc::invalid_argument, "IMEX order must be 1 or 2");
  if (!(dt > 0)) throw Error(Errc::invalid_argument, "dt must be positive");
  const size_t n = s.c.size();
  if (static_cast<std::int64_t>(n) != lap_.rows)
    throw Error(Errc::shape_mismatch, "state does not match the stepper grid");

  // explicit chemistry term: M * L f'_chem(c)
  std::vector<double> w(n);
  #pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
    w[static_cast<size_t>(i)] = f_chem_prime(s.c[static_cast<size_t>(i)], params_);
  std::vector<double> chem(n);
  kernels::csr_matvec(lap_, w, chem);
  const double mobility = params_.mobility;

  // AB2 needs a same-dt history; rebootstrap when dt changes
  const bool have_history = prev_explicit_.has_value() && prev_dt_ == dt;
  const int effective_order = (order == 2 && have_history) ? 2 : 1;

  ensure_implicit_matrix(dt, effective_order);
  std::vector<double> rhs(n);
  if (effective_order == 1) {
    #pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
      rhs[static_cast<size_t>(i)] =
          s.c[static_cast<size_t>(i)] + dt * mobility * chem[static_cast<size_t>(i)];
  } else {
    // Crank-Nicolson linear part + Adams-Bashforth 2 chemistry
    std::vector<double> bc(n);
    kernels::csr_matvec(bilap_, s.c, bc);
    const double half = 0.5 * dt * mobility * params_.kappa;
    const auto& prev = *prev_explicit_;
    #pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
      rhs[static_cast<size_t>(i)] =
          s.c[static_cast<size_t>(i)] - half * bc[static_cast<size_t>(i)] +
          dt * mobility *
              (1.5 * chem[static_cast<size_t>(i)] - 0.5 * prev[static_cast<size_t>(i)]);
  }

  s.c = cg_solve(implicit_, rhs, solve_);
  s.t += dt;

  if (order == 2) {
    prev_explicit_ = std::move(chem);
    prev_dt_ = dt;
  } else {
    prev_explicit_.reset();
  }
}

void imex_step(CahnHilliardStepper& stepper, CahnHilliardState& s, double dt, int order) {
  stepper.step(s, dt, order);
}

}  // namespace stencilkit
