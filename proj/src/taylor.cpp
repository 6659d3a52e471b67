#include "stencilkit/taylor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace stencilkit {

namespace {

constexpr int kMaxTrunc = 32;

/// Visit every multi-index of dimension d with |a| < trunc.
void for_each_index(int dim, int trunc, const std::function<void(const MultiIndex&)>& fn) {
  MultiIndex a(dim, 0);
  std::function<void(int, int)> rec = [&](int axis, int remaining) {
    if (axis == dim - 1) {
      for (int k = 0; k < remaining; ++k) {
        a[axis] = k;
        fn(a);
      }
      a[axis] = 0;
      return;
    }
    for (int k = 0; k < remaining; ++k) {
      a[axis] = k;
      rec(axis + 1, remaining - k);
    }
    a[axis] = 0;
  };
  rec(0, trunc);
}

Rational monomial(const Offset& u, const MultiIndex& a) {
  Rational num(1);
  Rational den(1);
  for (size_t i = 0; i < u.size(); ++i) {
    num *= int_pow(u[i], static_cast<unsigned>(a[i]));
    den *= factorial(static_cast<unsigned>(a[i]));
  }
  return num / den;
}

MultiIndex index_sum(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

MultiIndex index_diff(const MultiIndex& a, const MultiIndex& b) {
  MultiIndex r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

void drop_zeros(std::map<MultiIndex, Rational>& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second.is_zero())
      it = m.erase(it);
    else
      ++it;
  }
}

/// Unique nonzero entry of minimal |a|; MixedLeadingOrder if tied.
std::pair<MultiIndex, Rational> leading_entry(const TaylorTable& t) {
  if (t.coeffs.empty())
    throw Error(Errc::truncation_too_small, "table has no nonzero coefficients");
  int min_order = -1;
  for (const auto& [a, c] : t.coeffs) {
    int o = order_of(a);
    if (min_order < 0 || o < min_order) min_order = o;
  }
  std::vector<std::pair<MultiIndex, Rational>> leaders;
  for (const auto& [a, c] : t.coeffs)
    if (order_of(a) == min_order) leaders.emplace_back(a, c);
  if (leaders.size() > 1)
    throw Error(Errc::mixed_leading_order,
                "several nonzero entries share the minimal order " + std::to_string(min_order));
  return leaders.front();
}

}  // namespace

int order_of(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0); }

TaylorTable expand(const Stencil& s, int trunc) {
  if (trunc < 1) throw Error(Errc::invalid_argument, "truncation must be >= 1");
  TaylorTable t;
  t.dim = s.dim();
  t.beta = MultiIndex(s.dim(), 0);
  t.trunc = trunc;
  t.h_offset = s.h_power();
  for_each_index(s.dim(), trunc, [&](const MultiIndex& a) {
    Rational sum(0);
    for (const auto& [u, c] : s.entries()) sum += c * monomial(u, a);
    if (!sum.is_zero()) t.coeffs[a] = sum;
  });
  if (t.coeffs.empty())
    throw Error(Errc::truncation_too_small,
                "all coefficients below truncation " + std::to_string(trunc) + " vanish");
  return t;
}

StencilReport report(const TaylorTable& t) {
  auto [lead, lead_coeff] = leading_entry(t);
  int lead_order = order_of(lead);
  if (lead_coeff != Rational(1))
    throw Error(Errc::not_normalized,
                "leading coefficient is " + lead_coeff.str() + ", not the required 1");
  if (lead_order + t.h_offset != 0)
    throw Error(Errc::not_normalized,
                "weights scale as h^" + std::to_string(t.h_offset) + " but leading order is " +
                    std::to_string(lead_order));

  int gap = -1;
  for (const auto& [a, c] : t.coeffs) {
    if (a == lead) continue;
    gap = (gap < 0) ? order_of(a) - lead_order : std::min(gap, order_of(a) - lead_order);
  }
  if (gap < 0)
    throw Error(Errc::accuracy_exceeds_truncation,
                "no error term below truncation " + std::to_string(t.trunc) +
                    "; re-expand with a larger truncation");

  StencilReport r;
  r.derivative = index_sum(lead, t.beta);
  r.accuracy = gap;
  for (const auto& [a, c] : t.coeffs)
    if (a != lead && order_of(a) == lead_order + gap) r.leading_errors.emplace_back(index_sum(a, t.beta), c);
  return r;
}

StencilReport analyze(const Stencil& s) {
  for (int trunc = 8; trunc <= kMaxTrunc; trunc *= 2) {
    try {
      return report(expand(s, trunc));
    } catch (const Error& e) {
      if (trunc * 2 <= kMaxTrunc &&
          (e.code() == Errc::truncation_too_small || e.code() == Errc::accuracy_exceeds_truncation))
        continue;
      throw;
    }
  }
  throw Error(Errc::accuracy_exceeds_truncation, "unreachable");
}

TaylorTable retarget(const TaylorTable& t, const Offset& shift) {
  if (static_cast<int>(shift.size()) != t.dim)
    throw Error(Errc::dim_mismatch, "shift length does not match table dimension");
  TaylorTable out = t;
  for (const auto& [a, c] : t.coeffs) {
    int budget = t.trunc - 1 - order_of(a);
    if (budget < 1) continue;
    // correction: c * shift^delta / delta! lands at a + delta for |delta| >= 1
    for_each_index(t.dim, budget + 1, [&](const MultiIndex& delta) {
      if (order_of(delta) == 0) return;
      Rational w(1);
      for (size_t i = 0; i < delta.size(); ++i) {
        w *= int_pow(shift[i], static_cast<unsigned>(delta[i]));
        w = w / factorial(static_cast<unsigned>(delta[i]));
      }
      if (w.is_zero()) return;
      out.coeffs[index_sum(a, delta)] += c * w;
    });
  }
  drop_zeros(out.coeffs);
  if (out.coeffs.empty())
    throw Error(Errc::truncation_too_small, "retarget cancelled the entire table");
  return out;
}

AccuracyCheck min_accuracy_check(const Stencil& a, const Stencil& b, int trunc) {
  if (a.dim() != b.dim()) throw Error(Errc::dim_mismatch, "stencils of different dimension");
  auto run = [&](const Stencil& s) {
    return trunc > 0 ? report(expand(s, trunc)) : analyze(s);
  };
  AccuracyCheck chk;
  chk.report_a = run(a);
  chk.report_b = run(b);
  Stencil c = compose(a, b);
  chk.report_composed = run(c);

  const int qa = chk.report_a.accuracy, qb = chk.report_b.accuracy;
  chk.q_min = std::min(qa, qb);

  auto relative = [](const StencilReport& r) {
    std::map<MultiIndex, Rational> m;
    for (const auto& [idx, coeff] : r.leading_errors) m[index_diff(idx, r.derivative)] = coeff;
    return m;
  };
  if (qa < qb) {
    chk.predicted = relative(chk.report_a);
  } else if (qb < qa) {
    chk.predicted = relative(chk.report_b);
  } else {
    chk.predicted = relative(chk.report_a);
    for (const auto& [idx, coeff] : relative(chk.report_b)) chk.predicted[idx] += coeff;
    drop_zeros(chk.predicted);
  }
  chk.cancellation = chk.predicted.empty();
  chk.actual = relative(chk.report_composed);

  if (chk.cancellation) {
    // exact cancellation: accuracy must strictly improve past min(q_a, q_b)
    chk.min_rule_holds = chk.report_composed.accuracy > chk.q_min;
    chk.coefficient_identity = chk.min_rule_holds;
  } else {
    chk.min_rule_holds = chk.report_composed.accuracy == chk.q_min;
    chk.coefficient_identity = chk.min_rule_holds && chk.actual == chk.predicted;
  }
  return chk;
}

std::vector<Rational> normalized_series(const TaylorTable& t, int count) {
  if (t.dim != 1) throw Error(Errc::invalid_argument, "series view is one-dimensional");
  auto [lead, lead_coeff] = leading_entry(t);
  std::vector<Rational> slots(static_cast<size_t>(count), Rational(0));
  for (const auto& [a, c] : t.coeffs) {
    int j = a[0] - lead[0];
    if (j >= 0 && j < count) slots[static_cast<size_t>(j)] = c;
  }
  return slots;
}

int normalized_beta(const TaylorTable& t) {
  if (t.dim != 1) throw Error(Errc::invalid_argument, "series view is one-dimensional");
  return leading_entry(t).first[0] + t.beta[0];
}

std::string format_multi_index(const MultiIndex& a) {
  if (a.size() == 1) return std::to_string(a[0]);
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

std::string format_series(const TaylorTable& t, int count) {
  std::ostringstream os;
  if (t.dim == 1) {
    os << "({";
    auto slots = normalized_series(t, count);
    for (int j = 0; j < count; ++j) os << (j ? ", " : "") << slots[static_cast<size_t>(j)].str();
    os << ", ...}, beta=" << normalized_beta(t) << ")";
    return os.str();
  }
  // d >= 2: list absolute derivative indices sorted by order, then lexicographic
  std::vector<std::pair<MultiIndex, Rational>> items(t.coeffs.begin(), t.coeffs.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    return order_of(x.first) < order_of(y.first);
  });
  auto lead = leading_entry(t).first;
  os << "({";
  int shown = 0;
  for (const auto& [a, c] : items) {
    if (shown == count) break;
    os << (shown ? ", " : "") << format_multi_index(index_sum(a, t.beta)) << ": " << c.str();
    ++shown;
  }
  os << ", ...}, beta=" << format_multi_index(index_sum(lead, t.beta)) << ")";
  return os.str();
}

}  // namespace stencilkit
