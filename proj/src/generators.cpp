#include "stencilkit/generators.hpp"

#include <string>

namespace stencilkit {

std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const size_t n = m.size();
  if (rhs.size() != n) throw Error(Errc::shape_mismatch, "matrix/rhs size mismatch");
  std::vector<size_t> col_of(n);
  for (size_t i = 0; i < n; ++i) col_of[i] = i;

  for (size_t k = 0; k < n; ++k) {
    // full pivoting: any nonzero works in exact arithmetic, take the first
    size_t pr = n, pc = n;
    for (size_t i = k; i < n && pr == n; ++i)
      for (size_t j = k; j < n; ++j)
        if (!m[i][j].is_zero()) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == n) throw Error(Errc::singular_system, "exact elimination hit a zero block");
    std::swap(m[k], m[pr]);
    std::swap(rhs[k], rhs[pr]);
    if (pc != k) {
      for (size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][pc]);
      std::swap(col_of[k], col_of[pc]);
    }
    for (size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      Rational f = m[i][k] / m[k][k];
      for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      rhs[i] -= f * rhs[k];
    }
  }
  std::vector<Rational> y(n, Rational(0));
  for (size_t k = n; k-- > 0;) {
    Rational s = rhs[k];
    for (size_t j = k + 1; j < n; ++j) s -= m[k][j] * y[j];
    y[k] = s / m[k][k];
  }
  std::vector<Rational> x(n, Rational(0));
  for (size_t k = 0; k < n; ++k) x[col_of[k]] = y[k];
  return x;
}

namespace {

Stencil solve_moments(const std::vector<int>& points, int p) {
  const size_t n = points.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  std::vector<Rational> rhs(n, Rational(0));
  for (size_t alpha = 0; alpha < n; ++alpha) {
    for (size_t i = 0; i < n; ++i)
      m[alpha][i] = int_pow(points[i], static_cast<unsigned>(alpha)) / factorial(static_cast<unsigned>(alpha));
    if (static_cast<int>(alpha) == p) rhs[alpha] = Rational(1);
  }
  auto weights = solve_rational(std::move(m), std::move(rhs));
  std::map<Offset, Rational> entries;
  for (size_t i = 0; i < n; ++i)
    if (!weights[i].is_zero()) entries[{points[i]}] = weights[i];
  return Stencil(1, -p, std::move(entries));
}

}  // namespace

Stencil make(const StencilSpec& spec) {
  const int p = spec.derivative, q = spec.accuracy;
  if (p < 1) throw Error(Errc::invalid_argument, "derivative order must be >= 1");
  if (q < 1) throw Error(Errc::invalid_argument, "accuracy must be >= 1");

  std::vector<int> points;
  switch (spec.style) {
    case StencilStyle::centered: {
      // symmetric stencils pick up a parity bonus, so odd requests round up
      const int q_eff = q + (q % 2);
      const int m = (p + 1) / 2 + q_eff / 2 - 1;
      for (int u = -m; u <= m; ++u) points.push_back(u);
      break;
    }
    case StencilStyle::forward:
      for (int u = 0; u < p + q; ++u) points.push_back(u);
      break;
    case StencilStyle::backward:
      for (int u = -(p + q - 1); u <= 0; ++u) points.push_back(u);
      break;
  }
  if (static_cast<int>(points.size()) <= p)
    throw Error(Errc::invalid_argument, "support too small for the requested derivative");
  return solve_moments(points, p);
}

Stencil laplacian(int dim, int accuracy) {
  if (dim < 1 || dim > 3) throw Error(Errc::invalid_argument, "laplacian supports d in {1,2,3}");
  if (accuracy < 2 || accuracy % 2 != 0 || accuracy > 8)
    throw Error(Errc::unsupported_accuracy, "laplacian accuracy must be even, 2..8");
  Stencil base = make({.derivative = 2, .accuracy = accuracy, .style = StencilStyle::centered});
  std::map<Offset, Rational> entries;
  for (int axis = 0; axis < dim; ++axis) {
    for (const auto& [off, coeff] : base.entries()) {
      Offset o(static_cast<size_t>(dim), 0);
      o[axis] = off[0];
      entries[std::move(o)] += coeff;
    }
  }
  return Stencil(dim, -2, std::move(entries));
}

StencilStyle style_from_string(const std::string& s) {
  if (s == "centered") return StencilStyle::centered;
  if (s == "forward") return StencilStyle::forward;
  if (s == "backward") return StencilStyle::backward;
  throw Error(Errc::invalid_argument, "unknown stencil style '" + s + "'");
}

const char* style_name(StencilStyle s) {
  switch (s) {
    case StencilStyle::centered: return "centered";
    case StencilStyle::forward: return "forward";
    case StencilStyle::backward: return "backward";
  }
  return "?";
}

}  // namespace stencilkit
