#ifndef STENCILKIT_GRID_HPP
#define STENCILKIT_GRID_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "stencilkit/stencil.hpp"

namespace stencilkit {

/// base^exp by repeated multiplication; exact for dyadic bases and the small
/// integer exponents stencils carry, unlike std::pow.
double pow_int(double base, int exp);

enum class BoundaryKind { periodic, simply_supported };

/// Structured d-dimensional grid with uniform spacing h. For a periodic axis
/// every grid point is an unknown; for a simply-supported axis only interior
/// points are unknowns (f = 0 on the boundary, ghosts by odd reflection).
struct GridSpec {
  int dim = 1;
  std::vector<int> n;          // points per axis, boundary included
  double h = 1.0;
  std::vector<double> origin;  // coordinate of grid index 0 per axis
  std::vector<BoundaryKind> bc;

  void validate() const;
  int unknowns_per_axis(int axis) const;
  std::int64_t unknown_count() const;
  /// Physical coordinate of an unknown's grid point along one axis.
  double coordinate(int axis, int unknown_index) const;
};

GridSpec make_periodic_grid(int dim, int n_per_axis, double h, double origin = 0.0);

/// Compressed sparse row matrix; columns sorted in each row, no stored zeros.
struct CsrMatrix {
  std::int64_t rows = 0, cols = 0;
  std::vector<std::int64_t> row_ptr;
  std::vector<std::int64_t> col_idx;
  std::vector<double> values;

  std::int64_t nnz() const { return static_cast<std::int64_t>(values.size()); }
};

/// One row per unknown; periodic axes wrap, simply-supported axes use odd
/// reflection of ghost points (f = 0 and f'' = 0 on the boundary). Entry
/// values are coefficient * h^h_power in double precision.
CsrMatrix assemble(const Stencil& s, const GridSpec& g);

/// (nnz, fill percentage).
std::pair<std::int64_t, double> sparsity_report(const CsrMatrix& m);

std::vector<double> apply(const CsrMatrix& m, std::span<const double> x);

}  // namespace stencilkit

#endif
