#include "stencilkit/stability.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace stencilkit {

namespace {

constexpr int kSamples = 8192;
constexpr double kThetaTol = 1e-12;

double golden_min(const std::function<double(double)>& f, double a, double b, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::complex<double> symbol(const Stencil& s, double theta) {
  if (s.dim() != 1) throw Error(Errc::dim_mismatch, "symbol() expects a 1D stencil");
  return symbol_nd(s, {theta});
}

std::complex<double> symbol_nd(const Stencil& s, const std::vector<double>& theta) {
  if (static_cast<int>(theta.size()) != s.dim())
    throw Error(Errc::dim_mismatch, "angle count does not match stencil dimension");
  std::complex<double> acc(0, 0);
  for (const auto& [off, coeff] : s.entries()) {
    double phase = 0;
    for (size_t a = 0; a < theta.size(); ++a) phase += theta[a] * off[a];
    acc += coeff.to_double() * std::complex<double>(std::cos(phase), std::sin(phase));
  }
  return acc;
}

StabilityReport max_stable_dt(const Stencil& s, int sign,
                              const std::vector<double>& candidate_thetas) {
  if (s.dim() != 1) throw Error(Errc::dim_mismatch, "von Neumann analysis expects a 1D stencil");
  if (sign != 1 && sign != -1) throw Error(Errc::invalid_argument, "sign must be +1 or -1");

  double abs_scale = 0;
  for (const auto& [off, coeff] : s.entries()) abs_scale += std::abs(coeff.to_double());

  const double two_pi = 2 * std::numbers::pi;
  auto g = [&](double theta) { return sign * symbol(s, theta).real(); };

  // composed stencils with stride-2 entries alias on [0, pi), so sample the
  // full period
  double min_val = 0, min_theta = 0, max_val = 0, max_imag = 0;
  #pragma omp parallel
  {
    double lmin = 0, lmin_theta = 0, lmax = 0, limag = 0;
    #pragma omp for nowait
    for (int k = 0; k < kSamples; ++k) {
      double theta = two_pi * k / kSamples;
      auto sym = symbol(s, theta);
      limag = std::max(limag, std::abs(sym.imag()));
      double v = sign * sym.real();
      if (v < lmin || (v == lmin && theta < lmin_theta)) {
        lmin = v;
        lmin_theta = theta;
      }
      lmax = std::max(lmax, v);
    }
    #pragma omp critical
    {
      if (lmin < min_val || (lmin == min_val && lmin_theta < min_theta)) {
        min_val = lmin;
        min_theta = lmin_theta;
      }
      max_val = std::max(max_val, lmax);
      max_imag = std::max(max_imag, limag);
    }
  }

  if (max_imag > 1e-12 * abs_scale)
    throw Error(Errc::not_dissipative, "symbol has a nonzero imaginary part (asymmetric stencil)");
  if (max_val > 1e-9 * abs_scale)
    throw Error(Errc::unstable_for_all_dt, "sign * symbol is positive somewhere; every dt grows");

  // refine around the sampled minimum
  const double step = two_pi / kSamples;
  double refined = golden_min(g, min_theta - step, min_theta + step, kThetaTol);
  if (g(refined) < min_val) {
    min_val = g(refined);
    min_theta = refined;
  }
  for (double theta : candidate_thetas) {
    double v = g(theta);
    if (v < min_val) {
      min_val = v;
      min_theta = theta;
    }
  }

  if (std::abs(min_val) <= 1e-12 * abs_scale)
    throw Error(Errc::unstable_for_all_dt, "symbol is degenerate; no dissipative mode found");

  StabilityReport r;
  r.m = -s.h_power();
  r.symbol_min = min_val;
  r.argmin_theta = std::fmod(min_theta + two_pi, two_pi);
  r.alpha = 2.0 / std::abs(min_val);
  auto [lo, hi] = s.support(0);
  r.support_min = lo;
  r.support_max = hi;
  return r;
}

}  // namespace stencilkit
