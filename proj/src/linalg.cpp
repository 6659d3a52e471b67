#include "stencilkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "stencilkit/kernels.hpp"
#include "stencilkit/stability.hpp"

namespace stencilkit {

namespace ker = kernels;

std::vector<double> cg_solve(const CsrMatrix& m, std::span<const double> b, const SolveOptions& opts) {
  if (m.rows != m.cols) throw Error(Errc::shape_mismatch, "cg_solve needs a square matrix");
  if (static_cast<std::int64_t>(b.size()) != m.rows)
    throw Error(Errc::shape_mismatch, "rhs length does not match matrix");
  const size_t n = b.size();
  const std::int64_t max_iter = opts.max_iter > 0 ? opts.max_iter : 10 * m.rows;

  std::vector<double> x(n, 0.0), r(b.begin(), b.end()), p(r), q(n);
  const double bnorm = ker::nrm2(r);
  if (bnorm == 0.0) return x;
  const double target = opts.rel_tol * bnorm;

  double rho = ker::dot(r, r);
  std::int64_t it = 0;
  for (; it < max_iter; ++it) {
    if (std::sqrt(rho) <= target) {
      // recurrence says converged; accept only if the true residual agrees
      ker::csr_matvec(m, x, q);
      double true_res = 0;
      #pragma omp parallel for schedule(static) reduction(+ : true_res)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
        double d = b[static_cast<size_t>(i)] - q[static_cast<size_t>(i)];
        true_res += d * d;
      }
      true_res = std::sqrt(true_res);
      if (true_res <= target) break;
      // drift between recurrence and true residual: restart from x
      #pragma omp parallel for schedule(static)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
        r[static_cast<size_t>(i)] = b[static_cast<size_t>(i)] - q[static_cast<size_t>(i)];
      p = r;
      rho = ker::dot(r, r);
    }
    ker::csr_matvec(m, p, q);
    const double pq = ker::dot(p, q);
    if (pq <= 0)
      throw Error(Errc::no_convergence, "matrix is not positive definite on the Krylov space");
    const double alpha = rho / pq;
    ker::axpy(alpha, p, x);
    ker::axpy(-alpha, q, r);
    const double rho_next = ker::dot(r, r);
    ker::xpby(r, rho_next / rho, p);
    rho = rho_next;
  }
  ker::csr_matvec(m, x, q);
  double res = 0;
  for (size_t i = 0; i < n; ++i) res += (b[i] - q[i]) * (b[i] - q[i]);
  res = std::sqrt(res);
  if (res > target)
    throw Error(Errc::no_convergence, "cg stalled after " + std::to_string(it) +
                                          " iterations at relative residual " +
                                          std::to_string(res / bnorm));
  if (opts.deflate_mean) {
    const double mean = ker::sum(x) / static_cast<double>(n);
    for (auto& v : x) v -= mean;
  }
  return x;
}

double power_iteration(const CsrMatrix& m, double tol, std::uint64_t seed, std::int64_t max_iter) {
  if (m.rows != m.cols) throw Error(Errc::shape_mismatch, "power iteration needs a square matrix");
  const size_t n = static_cast<size_t>(m.rows);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> v(n), w(n);
  for (auto& x : v) x = unit(rng);
  double nv = ker::nrm2(v);
  for (auto& x : v) x /= nv;

  double lambda = 0, prev = 0, prev_delta = 0;
  for (std::int64_t it = 0; it < max_iter; ++it) {
    ker::csr_matvec(m, v, w);
    lambda = ker::dot(v, w);  // Rayleigh quotient, |v| = 1
    const double wn = ker::nrm2(w);
    if (wn == 0.0) return 0.0;  // hit the kernel exactly
    for (size_t i = 0; i < n; ++i) v[i] = w[i] / wn;

    if (it > 0) {
      const double delta = std::abs(lambda - prev);
      if (it > 1 && prev_delta > 0 && delta < prev_delta) {
        // geometric tail estimate: remaining error ~ delta * r / (1 - r)
        const double r = delta / prev_delta;
        const double tail = delta * r / (1.0 - r);
        if (tail <= 0.25 * tol * std::abs(lambda)) return std::abs(lambda);
      }
      if (delta == 0.0) return std::abs(lambda);
    }
    prev_delta = it > 0 ? std::abs(lambda - prev) : 0;
    prev = lambda;
  }
  throw Error(Errc::no_convergence, "power iteration did not settle within iteration budget");
}

namespace {

double refine_symbol_max(const Stencil& s, std::vector<double> theta, double best, double shift,
                         double scale_total) {
  // coordinate-wise golden-section polish around a sampled maximum
  constexpr double inv_phi = 0.6180339887498949;
  auto value = [&](const std::vector<double>& th) {
    return std::abs(shift + scale_total * symbol_nd(s, th).real());
  };
  const double two_pi = 2 * std::numbers::pi;
  double window = two_pi / 64;
  for (int sweep = 0; sweep < 4; ++sweep) {
    for (size_t a = 0; a < theta.size(); ++a) {
      double lo = theta[a] - window, hi = theta[a] + window;
      auto f = [&](double t) {
        std::vector<double> th = theta;
        th[a] = t;
        return -value(th);
      };
      double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
      double f1 = f(x1), f2 = f(x2);
      while (hi - lo > 1e-12) {
        if (f1 < f2) {
          hi = x2; x2 = x1; f2 = f1;
          x1 = hi - inv_phi * (hi - lo);
          f1 = f(x1);
        } else {
          lo = x1; x1 = x2; f1 = f2;
          x2 = lo + inv_phi * (hi - lo);
          f2 = f(x2);
        }
      }
      theta[a] = 0.5 * (lo + hi);
    }
    window /= 16;
  }
  return std::max(best, value(theta));
}

}  // namespace

SpectrumReport periodic_spectrum(const Stencil& s, const GridSpec& g, double affine_shift,
                                 double affine_scale) {
  g.validate();
  if (s.dim() != g.dim) throw Error(Errc::dim_mismatch, "stencil/grid dimension mismatch");
  for (auto bc : g.bc)
    if (bc != BoundaryKind::periodic)
      throw Error(Errc::non_periodic, "analytic spectrum needs all axes periodic");

  const double two_pi = 2 * std::numbers::pi;
  const double scale_total = affine_scale * pow_int(g.h, s.h_power());
  const std::int64_t modes = g.unknown_count();

  SpectrumReport rep;
  rep.eigenvalues.resize(static_cast<size_t>(modes));

  #pragma omp parallel for schedule(static)
  for (std::int64_t mode = 0; mode < modes; ++mode) {
    std::int64_t rem = mode;
    std::vector<double> theta(static_cast<size_t>(g.dim));
    for (int a = 0; a < g.dim; ++a) {
      const int na = g.n[static_cast<size_t>(a)];
      theta[static_cast<size_t>(a)] = two_pi * static_cast<double>(rem % na) / na;
      rem /= na;
    }
    rep.eigenvalues[static_cast<size_t>(mode)] = affine_shift + scale_total * symbol_nd(s, theta);
  }

  double rho = 0, min_nonzero = 0;
  for (const auto& ev : rep.eigenvalues) {
    const double a = std::abs(ev);
    rho = std::max(rho, a);
  }
  for (const auto& ev : rep.eigenvalues) {
    const double a = std::abs(ev);
    if (a > 1e-12 * rho && (min_nonzero == 0 || a < min_nonzero)) min_nonzero = a;
  }
  rep.spectral_radius = rho;
  rep.condition_estimate = min_nonzero > 0 ? rho / min_nonzero : 0;

  // continuous-torus maximum of the symbol modulus
  const int samples_per_axis = g.dim == 1 ? 4096 : (g.dim == 2 ? 512 : 96);
  std::int64_t total = 1;
  for (int a = 0; a < g.dim; ++a) total *= samples_per_axis;
  double best = 0;
  std::vector<double> best_theta(static_cast<size_t>(g.dim), 0.0);
  #pragma omp parallel
  {
    double lbest = 0;
    std::vector<double> ltheta(static_cast<size_t>(g.dim), 0.0);
    std::vector<double> theta(static_cast<size_t>(g.dim));
    #pragma omp for nowait
    for (std::int64_t k = 0; k < total; ++k) {
      std::int64_t rem = k;
      for (int a = 0; a < g.dim; ++a) {
        theta[static_cast<size_t>(a)] = two_pi * static_cast<double>(rem % samples_per_axis) / samples_per_axis;
        rem /= samples_per_axis;
      }
      const double v = std::abs(affine_shift + scale_total * symbol_nd(s, theta).real());
      if (v > lbest) {
        lbest = v;
        ltheta = theta;
      }
    }
    #pragma omp critical
    {
      if (lbest > best || (lbest == best && ltheta < best_theta)) {
        best = lbest;
        best_theta = ltheta;
      }
    }
  }
  rep.symbol_radius = refine_symbol_max(s, best_theta, best, affine_shift, scale_total);
  return rep;
}

CsrMatrix identity_plus_scaled(const CsrMatrix& m, double alpha) {
  if (m.rows != m.cols) throw Error(Errc::shape_mismatch, "needs a square matrix");
  CsrMatrix out;
  out.rows = m.rows;
  out.cols = m.cols;
  out.row_ptr.resize(static_cast<size_t>(m.rows) + 1, 0);
  std::vector<std::pair<std::int64_t, double>> row;
  for (std::int64_t i = 0; i < m.rows; ++i) {
    row.clear();
    bool diag_seen = false;
    for (std::int64_t k = m.row_ptr[static_cast<size_t>(i)]; k < m.row_ptr[static_cast<size_t>(i) + 1]; ++k) {
      double v = alpha * m.values[static_cast<size_t>(k)];
      if (m.col_idx[static_cast<size_t>(k)] == i) {
        v += 1.0;
        diag_seen = true;
      }
      if (v != 0.0) row.emplace_back(m.col_idx[static_cast<size_t>(k)], v);
    }
    if (!diag_seen) row.emplace_back(i, 1.0);
    std::sort(row.begin(), row.end());
    for (const auto& [c, v] : row) {
      out.col_idx.push_back(c);
      out.values.push_back(v);
    }
    out.row_ptr[static_cast<size_t>(i) + 1] = static_cast<std::int64_t>(out.col_idx.size());
  }
  return out;
}

CsrMatrix csr_matmul(const CsrMatrix& b, const CsrMatrix& a) {
  if (b.cols != a.rows) throw Error(Errc::shape_mismatch, "inner dimensions do not match");
  CsrMatrix out;
  out.rows = b.rows;
  out.cols = a.cols;
  out.row_ptr.resize(static_cast<size_t>(b.rows) + 1, 0);
  std::vector<double> acc(static_cast<size_t>(a.cols), 0.0);
  std::vector<std::int64_t> touched;
  for (std::int64_t i = 0; i < b.rows; ++i) {
    touched.clear();
    for (std::int64_t kb = b.row_ptr[static_cast<size_t>(i)]; kb < b.row_ptr[static_cast<size_t>(i) + 1]; ++kb) {
      const std::int64_t j = b.col_idx[static_cast<size_t>(kb)];
      const double vb = b.values[static_cast<size_t>(kb)];
      for (std::int64_t ka = a.row_ptr[static_cast<size_t>(j)]; ka < a.row_ptr[static_cast<size_t>(j) + 1]; ++ka) {
        const std::int64_t c = a.col_idx[static_cast<size_t>(ka)];
        if (acc[static_cast<size_t>(c)] == 0.0) touched.push_back(c);
        acc[static_cast<size_t>(c)] += vb * a.values[static_cast<size_t>(ka)];
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::int64_t c : touched) {
      if (acc[static_cast<size_t>(c)] != 0.0) {
        out.col_idx.push_back(c);
        out.values.push_back(acc[static_cast<size_t>(c)]);
      }
      acc[static_cast<size_t>(c)] = 0.0;
    }
    out.row_ptr[static_cast<size_t>(i) + 1] = static_cast<std::int64_t>(out.col_idx.size());
  }
  return out;
}

}  // namespace stencilkit
