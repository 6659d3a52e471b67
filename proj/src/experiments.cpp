#include "stencilkit/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "stencilkit/generators.hpp"
#include "stencilkit/grid.hpp"
#include "stencilkit/kernels.hpp"
#include "stencilkit/linalg.hpp"

namespace stencilkit {

using std::numbers::pi;

ConvergenceFit fit_loglog(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 3)
    throw Error(Errc::invalid_argument, "a convergence fit needs at least 3 samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(samples.size());
  for (const auto& [h, err] : samples) {
    if (!(h > 0) || !(err > 0))
      throw Error(Errc::invalid_argument, "convergence samples must be positive");
    const double lx = std::log(h), ly = std::log(err);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  ConvergenceFit fit;
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - fit.slope * sx) / n;
  fit.coefficient = std::exp(intercept);
  double rss = 0;
  for (const auto& [h, err] : samples) {
    const double r = std::log(err) - (fit.slope * std::log(h) + intercept);
    rss += r * r;
  }
  fit.fit_residual = std::sqrt(rss / n);
  fit.samples = std::move(samples);
  return fit;
}

double evaluate_stencil_1d(const Stencil& s, const std::function<double(double)>& f, double x,
                           double h) {
  if (s.dim() != 1) throw Error(Errc::dim_mismatch, "expected a 1D stencil");
  double acc = 0;
  for (const auto& [off, coeff] : s.entries()) acc += coeff.to_double() * f(x + off[0] * h);
  return acc * pow_int(h, s.h_power());
}

double evaluate_stencil_2d(const Stencil& s, const std::function<double(double, double)>& f,
                           double x, double y, double h) {
  if (s.dim() != 2) throw Error(Errc::dim_mismatch, "expected a 2D stencil");
  double acc = 0;
  for (const auto& [off, coeff] : s.entries())
    acc += coeff.to_double() * f(x + off[0] * h, y + off[1] * h);
  return acc * pow_int(h, s.h_power());
}

ConvergenceFit converge_1d(const std::vector<double>& h_ladder) {
  std::vector<double> ladder = h_ladder;
  if (ladder.empty())
    for (int k = 2; k <= 8; ++k) ladder.push_back(std::pow(2.0, -k));

  const Stencil d3 = compose(make({.derivative = 1, .accuracy = 2}),
                             make({.derivative = 2, .accuracy = 2}));
  auto f = [](double x) { return std::sin(x) * std::cos(x); };
  const double exact = -4.0 * std::cos(2.0 * pi);  // f'''(pi)

  std::vector<std::pair<double, double>> samples;
  for (double h : ladder)
    samples.emplace_back(h, std::abs(evaluate_stencil_1d(d3, f, pi, h) - exact));
  return fit_loglog(std::move(samples));
}

ConvergenceFit converge_2d(const std::vector<double>& h_ladder) {
  std::vector<double> ladder = h_ladder;
  if (ladder.empty()) ladder = {1.0 / 2, 1.0 / 3, 1.0 / 4, 1.0 / 6, 1.0 / 8};

  const Stencil d2_q4 = make({.derivative = 2, .accuracy = 4});
  const Stencil d1_q4 = make({.derivative = 1, .accuracy = 4});
  const Stencil d4x = compose(d2_q4, d2_q4);       // fourth derivative, fourth order
  const Stencil d3y = compose(d1_q4, d2_q4);       // third derivative, fourth order
  const Stencil mixed = outer_product(d4x, d3y);   // f^(4,3)

  auto f = [](double x, double y) {
    return std::sin(x) * std::cos(y) + std::cos(x) * std::sin(y);
  };
  const double x0 = 2.0 * pi, y0 = pi / 3.0;
  const double exact = std::sin(x0) * std::sin(y0) - std::cos(x0) * std::cos(y0);

  std::vector<std::pair<double, double>> samples;
  for (double h : ladder)
    samples.emplace_back(h, std::abs(evaluate_stencil_2d(mixed, f, x0, y0, h) - exact));
  return fit_loglog(std::move(samples));
}

BiharmonicResult biharmonic_solve(const std::vector<int>& interval_ladder, double rel_tol) {
  const Stencil lap = laplacian(2, 2);
  const Stencil bilap = compose(lap, lap);

  BiharmonicResult result;
  std::vector<std::pair<double, double>> samples;
  for (int intervals : interval_ladder) {
    const double h = 1.0 / intervals;
    GridSpec g;
    g.dim = 2;
    g.n = {intervals + 1, intervals + 1};
    g.h = h;
    g.origin = {0.0, 0.0};
    g.bc = {BoundaryKind::simply_supported, BoundaryKind::simply_supported};
    const CsrMatrix m = assemble(bilap, g);

    const std::int64_t count = g.unknown_count();
    std::vector<double> b(static_cast<size_t>(count)), exact(static_cast<size_t>(count));
    const int nu = g.unknowns_per_axis(0);
    for (std::int64_t row = 0; row < count; ++row) {
      const double x = g.coordinate(0, static_cast<int>(row % nu));
      const double y = g.coordinate(1, static_cast<int>(row / nu));
      const double sxy = std::sin(pi * x) * std::sin(pi * y);
      b[static_cast<size_t>(row)] = 4.0 * std::pow(pi, 4) * sxy;
      exact[static_cast<size_t>(row)] = sxy;
    }

    std::vector<double> x = cg_solve(m, b, {.rel_tol = rel_tol});

    double err = 0;
    for (size_t i = 0; i < x.size(); ++i) err = std::max(err, std::abs(x[i] - exact[i]));
    samples.emplace_back(h, err);

    std::vector<double> mx(x.size());
    kernels::csr_matvec(m, x, mx);
    double rnorm = 0, bnorm = 0;
    for (size_t i = 0; i < x.size(); ++i) {
      rnorm += (b[i] - mx[i]) * (b[i] - mx[i]);
      bnorm += b[i] * b[i];
    }
    result.residuals.push_back(std::sqrt(rnorm / bnorm));
  }
  result.fit = fit_loglog(std::move(samples));
  return result;
}

ChBenchmarkResult ch_benchmark(const ChBenchmarkOptions& opts) {
  CahnHilliardParams params;
  GridSpec grid = make_periodic_grid(opts.dim, opts.n, opts.h);
  CahnHilliardState state = ch_init(grid, params);
  CahnHilliardStepper stepper(grid, params);

  ChBenchmarkResult res;
  res.mass_initial = kernels::sum(state.c);
  state.energy_history.emplace_back(0.0, free_energy(state, params));
  kernels::minmax(state.c, res.c_min, res.c_max);

  const auto steps = static_cast<std::int64_t>(std::llround(opts.t_end / opts.dt));
  double prev_energy = state.energy_history.back().second;
  for (std::int64_t k = 1; k <= steps; ++k) {
    stepper.step(state, opts.dt, opts.order);

    const double mass = kernels::sum(state.c);
    res.mass_rel_drift_max =
        std::max(res.mass_rel_drift_max, std::abs(mass - res.mass_initial) / std::abs(res.mass_initial));
    double lo, hi;
    kernels::minmax(state.c, lo, hi);
    res.c_min = std::min(res.c_min, lo);
    res.c_max = std::max(res.c_max, hi);

    if (opts.energy_every > 0 && (k % opts.energy_every == 0 || k == steps)) {
      const double energy = free_energy(state, params);
      state.energy_history.emplace_back(state.t, energy);
      if (k > 1 && energy > prev_energy) {
        res.energy_monotone_after_first = false;
        res.max_energy_uptick = std::max(res.max_energy_uptick, energy - prev_energy);
      }
      prev_energy = energy;
    }
    if (opts.snapshot_every > 0 && opts.snapshot_hook && k % opts.snapshot_every == 0)
      opts.snapshot_hook(state, static_cast<int>(k));
  }
  res.mass_final = kernels::sum(state.c);
  res.state = std::move(state);
  return res;
}

std::vector<TemporalFit> ch_temporal_convergence(int dim, const std::vector<int>& orders, int n,
                                                 double t_end, std::vector<double> dt_ladder,
                                                 double ref_dt) {
  if (dt_ladder.empty()) dt_ladder = {1.0 / 2, 1.0 / 4, 1.0 / 8, 1.0 / 16, 1.0 / 32};
  CahnHilliardParams params;
  GridSpec grid = make_periodic_grid(dim, n, 1.0);
  const CahnHilliardState initial = ch_init(grid, params);

  auto run = [&](double dt, int order) {
    CahnHilliardState s = initial;
    CahnHilliardStepper stepper(grid, params);
    const auto steps = static_cast<std::int64_t>(std::llround(t_end / dt));
    for (std::int64_t k = 0; k < steps; ++k) stepper.step(s, dt, order);
    return s.c;
  };

  // one high-order fine-step reference shared by every scheme
  const std::vector<double> reference = run(ref_dt, 2);
  const double ref_norm = kernels::nrm2(reference);

  std::vector<TemporalFit> fits;
  for (int order : orders) {
    std::vector<std::pair<double, double>> samples;
    for (double dt : dt_ladder) {
      std::vector<double> c = run(dt, order);
      double diff = 0;
      for (size_t i = 0; i < c.size(); ++i) diff += (c[i] - reference[i]) * (c[i] - reference[i]);
      samples.emplace_back(dt, std::sqrt(diff) / ref_norm);
    }
    fits.push_back({order, fit_loglog(std::move(samples))});
  }
  return fits;
}

}  // namespace stencilkit
