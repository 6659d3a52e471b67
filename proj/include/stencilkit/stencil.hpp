#ifndef STENCILKIT_STENCIL_HPP
#define STENCILKIT_STENCIL_HPP

#include <map>
#include <utility>
#include <vector>

#include "stencilkit/rational.hpp"

namespace stencilkit {

/// Lattice offset in Z^d. Length must equal the owning stencil's dimension.
using Offset = std::vector<int>;

/// Finite-difference stencil in canonical form: a map from lattice offset to
/// exact rational coefficient, plus an integer grid-spacing exponent s.
/// The entry weight on a grid with spacing h is coefficient * h^s, so the
/// whole operator reads  f |-> sum_u  c_u h^s f(x0 + h u).
///
/// Canonical form: no zero coefficients are stored and the entry map is never
/// empty. Two stencils are equal iff dim, h_power and entries are all equal.
class Stencil {
 public:
  Stencil(int dim, int h_power, std::map<Offset, Rational> entries);

  static Stencil identity(int dim);

  int dim() const { return dim_; }
  int h_power() const { return h_power_; }
  const std::map<Offset, Rational>& entries() const { return entries_; }

  /// Inclusive [min, max] offset range along one axis.
  std::pair<int, int> support(int axis) const;

  friend bool operator==(const Stencil& a, const Stencil& b) {
    return a.dim_ == b.dim_ && a.h_power_ == b.h_power_ && a.entries_ == b.entries_;
  }

 private:
  int dim_;
  int h_power_;
  std::map<Offset, Rational> entries_;
};

Stencil scale(const Stencil& s, const Rational& c);
Stencil add(const Stencil& a, const Stencil& b);
Stencil shift(const Stencil& s, const Offset& o);

/// Stencil composition: offsets add, coefficients multiply, h exponents add.
/// The result applies `outer` to the field of values produced by `inner`.
Stencil compose(const Stencil& inner, const Stencil& outer);

/// Cross-axis product: result dimension is sx.dim + sy.dim, offsets are
/// concatenated and coefficients multiply.
Stencil outer_product(const Stencil& sx, const Stencil& sy);

Rational weight_sum(const Stencil& s);

}  // namespace stencilkit

#endif
