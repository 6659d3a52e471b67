#ifndef STENCILKIT_EXPERIMENTS_HPP
#define STENCILKIT_EXPERIMENTS_HPP

#include <functional>
#include <utility>
#include <vector>

#include "stencilkit/cahn_hilliard.hpp"
#include "stencilkit/stencil.hpp"

namespace stencilkit {

/// Least-squares fit of log(error) = p log(h) + log(C).
struct ConvergenceFit {
  double slope = 0;
  double coefficient = 0;
  double fit_residual = 0;  // RMS residual in log space
  std::vector<std::pair<double, double>> samples;  // (h, error)
};

ConvergenceFit fit_loglog(std::vector<std::pair<double, double>> samples);

/// Pointwise derivative of f at x through the stencil on spacing h.
double evaluate_stencil_1d(const Stencil& s, const std::function<double(double)>& f, double x,
                           double h);
double evaluate_stencil_2d(const Stencil& s, const std::function<double(double, double)>& f,
                           double x, double y, double h);

/// Third derivative of sin(x)cos(x) at pi via composed second-order stencils.
ConvergenceFit converge_1d(const std::vector<double>& h_ladder = {});

/// Mixed (4,3) derivative of sin(x)cos(y) + cos(x)sin(y) at (2pi, pi/3) via a
/// cross-axis product of fourth-order composed stencils.
ConvergenceFit converge_2d(const std::vector<double>& h_ladder = {});

/// Simply-supported plate problem on the unit square; returns the max-norm
/// error fit over the interval ladder (h = 1/intervals).
struct BiharmonicResult {
  ConvergenceFit fit;
  std::vector<double> residuals;  // relative solver residual per ladder point
};
BiharmonicResult biharmonic_solve(const std::vector<int>& interval_ladder = {8, 16, 32, 64},
                                  double rel_tol = 1e-10);

struct ChBenchmarkOptions {
  int dim = 2;
  int n = 100;          // points per axis
  double h = 1.0;
  double dt = 0.05;
  double t_end = 100.0;
  int order = 1;
  int energy_every = 1;  // record (t, F) every k steps
  std::function<void(const CahnHilliardState&, int step)> snapshot_hook;
  int snapshot_every = 0;
};

struct ChBenchmarkResult {
  CahnHilliardState state;
  double mass_initial = 0, mass_final = 0, mass_rel_drift_max = 0;
  double c_min = 0, c_max = 0;
  bool energy_monotone_after_first = true;
  double max_energy_uptick = 0;  // largest F increase seen after step 1
};

ChBenchmarkResult ch_benchmark(const ChBenchmarkOptions& opts);

/// Errors at t_end against a fine-step reference, one fit per scheme order.
struct TemporalFit {
  int order = 0;
  ConvergenceFit fit;
};
std::vector<TemporalFit> ch_temporal_convergence(int dim, const std::vector<int>& orders,
                                                 int n = 32, double t_end = 10.0,
                                                 std::vector<double> dt_ladder = {},
                                                 double ref_dt = 1.0 / 1024.0);

}  // namespace stencilkit

#endif
