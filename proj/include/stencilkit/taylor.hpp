#ifndef STENCILKIT_TAYLOR_HPP
#define STENCILKIT_TAYLOR_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stencilkit/stencil.hpp"

namespace stencilkit {

/// Derivative multi-index; components are non-negative in tables, but
/// differences of multi-indices (relative error slots) may go negative.
using MultiIndex = std::vector<int>;

int order_of(const MultiIndex& a);  // |a| = component sum

/// Truncated Taylor table of a stencil. The represented series is
///   sum_a  coeffs[a] * h^(|a| + h_offset) * f^(a + beta)(x0)
/// with coefficients stored for all |a| < trunc; absent means exactly zero.
/// expand() returns raw moment coefficients with beta = 0 and the stencil's
/// h exponent recorded in h_offset.
struct TaylorTable {
  int dim = 1;
  MultiIndex beta;
  int trunc = 0;
  int h_offset = 0;
  std::map<MultiIndex, Rational> coeffs;

  friend bool operator==(const TaylorTable&, const TaylorTable&) = default;
};

/// Result of analyzing a table: which derivative the stencil approximates,
/// its order of accuracy, and every nonzero leading error coefficient.
/// Leading error indices are absolute derivative orders (alpha + beta).
struct StencilReport {
  MultiIndex derivative;
  int accuracy = 0;
  std::vector<std::pair<MultiIndex, Rational>> leading_errors;
};

/// Raw Taylor expansion: coeffs[a] = sum_i c_i u_i^a / a! for |a| < trunc.
TaylorTable expand(const Stencil& s, int trunc);

/// Validates the table against the derivative-stencil rules (unit leading
/// coefficient, h exponent consistent with the leading order) and locates
/// the order of accuracy and leading error terms.
StencilReport report(const TaylorTable& t);

/// report() with the truncation discovered adaptively (doubling, cap 32).
StencilReport analyze(const Stencil& s);

/// Re-expands the table about a target shifted by -h*shift: adds the
/// correction series whose first nonzero entry is one order higher.
TaylorTable retarget(const TaylorTable& t, const Offset& shift);

/// Composed order-of-accuracy check: reports q of both inputs and of
/// compose(a, b), the predicted leading coefficients, and whether the
/// min(q_a, q_b) rule held.
struct AccuracyCheck {
  StencilReport report_a, report_b, report_composed;
  int q_min = 0;
  std::map<MultiIndex, Rational> predicted;  // relative slot -> coefficient
  std::map<MultiIndex, Rational> actual;
  bool coefficient_identity = false;
  bool min_rule_holds = false;
  bool cancellation = false;  // predicted coefficients vanished exactly
};

AccuracyCheck min_accuracy_check(const Stencil& a, const Stencil& b, int trunc = 0);

/// One-dimensional presentation helpers (paper-style slot view): slot j holds
/// the coefficient of h^j f^(beta_effective + j). No unit-leading requirement,
/// so invalid stencils print their telltale series unchanged.
std::vector<Rational> normalized_series(const TaylorTable& t, int count);
int normalized_beta(const TaylorTable& t);

/// "({1, 0, 1/12, ...}, beta=2)" for 1D; entry list form for d >= 2.
std::string format_series(const TaylorTable& t, int count);

std::string format_multi_index(const MultiIndex& a);

}  // namespace stencilkit

#endif
