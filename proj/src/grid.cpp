#include "stencilkit/grid.hpp"

#include <algorithm>
#include <cmath>

#include "stencilkit/kernels.hpp"

namespace stencilkit {

double pow_int(double base, int exp) {
  if (exp < 0) return 1.0 / pow_int(base, -exp);
  double r = 1.0;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

void GridSpec::validate() const {
  if (dim < 1) throw Error(Errc::invalid_argument, "grid dimension must be >= 1");
  if (static_cast<int>(n.size()) != dim || static_cast<int>(origin.size()) != dim ||
      static_cast<int>(bc.size()) != dim)
    throw Error(Errc::dim_mismatch, "grid axis arrays do not match dimension");
  for (int v : n)
    if (v < 3) throw Error(Errc::invalid_argument, "grid needs at least 3 points per axis");
  if (!(h > 0)) throw Error(Errc::invalid_argument, "grid spacing must be positive");
}

int GridSpec::unknowns_per_axis(int axis) const {
  return bc[axis] == BoundaryKind::periodic ? n[axis] : n[axis] - 2;
}

std::int64_t GridSpec::unknown_count() const {
  std::int64_t total = 1;
  for (int a = 0; a < dim; ++a) total *= unknowns_per_axis(a);
  return total;
}

double GridSpec::coordinate(int axis, int unknown_index) const {
  int gi = bc[axis] == BoundaryKind::periodic ? unknown_index : unknown_index + 1;
  return origin[axis] + gi * h;
}

GridSpec make_periodic_grid(int dim, int n_per_axis, double h, double origin) {
  GridSpec g;
  g.dim = dim;
  g.n.assign(static_cast<size_t>(dim), n_per_axis);
  g.h = h;
  g.origin.assign(static_cast<size_t>(dim), origin);
  g.bc.assign(static_cast<size_t>(dim), BoundaryKind::periodic);
  g.validate();
  return g;
}

namespace {

struct FlatEntry {
  std::vector<int> off;
  double value;
};

}  // namespace

CsrMatrix assemble(const Stencil& s, const GridSpec& g) {
  g.validate();
  if (s.dim() != g.dim) throw Error(Errc::dim_mismatch, "stencil/grid dimension mismatch");

  for (int a = 0; a < g.dim; ++a) {
    auto [lo, hi] = s.support(a);
    if (g.bc[a] == BoundaryKind::periodic) {
      if (hi - lo > g.n[a] - 1)
        throw Error(Errc::stencil_wider_than_grid, "periodic axis narrower than stencil support");
    } else {
      if (std::max(std::abs(lo), std::abs(hi)) > g.n[a] - 2)
        throw Error(Errc::stencil_wider_than_grid, "reflected ghost would leave the grid");
    }
  }

  const double scale = pow_int(g.h, s.h_power());
  std::vector<FlatEntry> entries;
  entries.reserve(s.entries().size());
  for (const auto& [off, coeff] : s.entries())
    entries.push_back({std::vector<int>(off.begin(), off.end()), coeff.to_double() * scale});

  std::vector<int> un(static_cast<size_t>(g.dim));
  for (int a = 0; a < g.dim; ++a) un[static_cast<size_t>(a)] = g.unknowns_per_axis(a);
  const std::int64_t rows = g.unknown_count();

  std::vector<std::vector<std::pair<std::int64_t, double>>> row_entries(static_cast<size_t>(rows));

  #pragma omp parallel for schedule(static)
  for (std::int64_t row = 0; row < rows; ++row) {
    std::vector<int> idx(static_cast<size_t>(g.dim));
    std::int64_t rem = row;
    for (int a = 0; a < g.dim; ++a) {  // x fastest
      idx[static_cast<size_t>(a)] = static_cast<int>(rem % un[static_cast<size_t>(a)]);
      rem /= un[static_cast<size_t>(a)];
    }
    auto& out = row_entries[static_cast<size_t>(row)];
    out.reserve(entries.size());
    for (const auto& e : entries) {
      double val = e.value;
      std::int64_t col = 0, stride = 1;
      bool dropped = false;
      for (int a = 0; a < g.dim && !dropped; ++a) {
        const int na = g.n[static_cast<size_t>(a)];
        int comp;
        if (g.bc[static_cast<size_t>(a)] == BoundaryKind::periodic) {
          comp = ((idx[static_cast<size_t>(a)] + e.off[static_cast<size_t>(a)]) % na + na) % na;
        } else {
          int gi = idx[static_cast<size_t>(a)] + 1 + e.off[static_cast<size_t>(a)];
          if (gi < 0) {  // odd reflection across the near boundary
            gi = -gi;
            val = -val;
          } else if (gi > na - 1) {
            gi = 2 * (na - 1) - gi;
            val = -val;
          }
          if (gi == 0 || gi == na - 1) {  // boundary value is zero
            dropped = true;
            break;
          }
          comp = gi - 1;
        }
        col += stride * comp;
        stride *= un[static_cast<size_t>(a)];
      }
      if (!dropped) out.emplace_back(col, val);
    }
    std::sort(out.begin(), out.end());
    // merge columns that folded together, drop exact zeros
    size_t w = 0;
    for (size_t r = 0; r < out.size();) {
      std::int64_t c = out[r].first;
      double v = 0;
      while (r < out.size() && out[r].first == c) v += out[r++].second;
      if (v != 0.0) out[w++] = {c, v};
    }
    out.resize(w);
  }

  CsrMatrix m;
  m.rows = m.cols = rows;
  m.row_ptr.resize(static_cast<size_t>(rows) + 1, 0);
  for (std::int64_t i = 0; i < rows; ++i)
    m.row_ptr[static_cast<size_t>(i) + 1] =
        m.row_ptr[static_cast<size_t>(i)] + static_cast<std::int64_t>(row_entries[static_cast<size_t>(i)].size());
  m.col_idx.resize(static_cast<size_t>(m.row_ptr.back()));
  m.values.resize(static_cast<size_t>(m.row_ptr.back()));
  #pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    std::int64_t k = m.row_ptr[static_cast<size_t>(i)];
    for (const auto& [c, v] : row_entries[static_cast<size_t>(i)]) {
      m.col_idx[static_cast<size_t>(k)] = c;
      m.values[static_cast<size_t>(k)] = v;
      ++k;
    }
  }
  return m;
}

std::pair<std::int64_t, double> sparsity_report(const CsrMatrix& m) {
  double pct = 100.0 * static_cast<double>(m.nnz()) /
               (static_cast<double>(m.rows) * static_cast<double>(m.cols));
  return {m.nnz(), pct};
}

std::vector<double> apply(const CsrMatrix& m, std::span<const double> x) {
  if (static_cast<std::int64_t>(x.size()) != m.cols)
    throw Error(Errc::shape_mismatch, "vector length does not match matrix columns");
  std::vector<double> y(static_cast<size_t>(m.rows));
  kernels::csr_matvec(m, x, y);
  return y;
}

}  // namespace stencilkit
