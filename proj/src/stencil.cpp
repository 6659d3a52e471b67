#include "stencilkit/stencil.hpp"

#include <algorithm>

namespace stencilkit {

namespace {

void check_dim(int dim) {
  if (dim < 1) throw Error(Errc::invalid_argument, "stencil dimension must be >= 1");
}

}  // namespace

Stencil::Stencil(int dim, int h_power, std::map<Offset, Rational> entries)
    : dim_(dim), h_power_(h_power), entries_(std::move(entries)) {
  check_dim(dim);
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (static_cast<int>(it->first.size()) != dim_)
      throw Error(Errc::dim_mismatch, "offset length does not match stencil dimension");
    if (it->second.is_zero())
      it = entries_.erase(it);
    else
      ++it;
  }
  if (entries_.empty())
    throw Error(Errc::empty_stencil, "all coefficients cancelled; empty stencil is not representable");
}

Stencil Stencil::identity(int dim) {
  check_dim(dim);
  std::map<Offset, Rational> e;
  e[Offset(dim, 0)] = Rational(1);
  return Stencil(dim, 0, std::move(e));
}

std::pair<int, int> Stencil::support(int axis) const {
  if (axis < 0 || axis >= dim_) throw Error(Errc::invalid_argument, "axis out of range");
  int lo = entries_.begin()->first[axis], hi = lo;
  for (const auto& [off, coeff] : entries_) {
    lo = std::min(lo, off[axis]);
    hi = std::max(hi, off[axis]);
  }
  return {lo, hi};
}

Stencil scale(const Stencil& s, const Rational& c) {
  if (c.is_zero()) throw Error(Errc::zero_scale, "scaling a stencil by zero");
  std::map<Offset, Rational> out;
  for (const auto& [off, coeff] : s.entries()) out[off] = coeff * c;
  return Stencil(s.dim(), s.h_power(), std::move(out));
}

Stencil add(const Stencil& a, const Stencil& b) {
  if (a.dim() != b.dim()) throw Error(Errc::dim_mismatch, "adding stencils of different dimension");
  if (a.h_power() != b.h_power())
    throw Error(Errc::power_mismatch, "adding stencils of different h power");
  std::map<Offset, Rational> out = a.entries();
  for (const auto& [off, coeff] : b.entries()) out[off] += coeff;
  return Stencil(a.dim(), a.h_power(), std::move(out));
}

Stencil shift(const Stencil& s, const Offset& o) {
  if (static_cast<int>(o.size()) != s.dim())
    throw Error(Errc::dim_mismatch, "shift offset length does not match stencil dimension");
  std::map<Offset, Rational> out;
  for (const auto& [off, coeff] : s.entries()) {
    Offset moved = off;
    for (int a = 0; a < s.dim(); ++a) moved[a] += o[a];
    out[std::move(moved)] = coeff;
  }
  return Stencil(s.dim(), s.h_power(), std::move(out));
}

Stencil compose(const Stencil& inner, const Stencil& outer) {
  if (inner.dim() != outer.dim())
    throw Error(Errc::dim_mismatch, "composing stencils of different dimension");
  std::map<Offset, Rational> out;
  for (const auto& [u, a] : inner.entries()) {
    for (const auto& [v, b] : outer.entries()) {
      Offset w = u;
      for (int k = 0; k < inner.dim(); ++k) w[k] += v[k];
      out[std::move(w)] += a * b;
    }
  }
  return Stencil(inner.dim(), inner.h_power() + outer.h_power(), std::move(out));
}

Stencil outer_product(const Stencil& sx, const Stencil& sy) {
  std::map<Offset, Rational> out;
  for (const auto& [u, a] : sx.entries()) {
    for (const auto& [v, b] : sy.entries()) {
      Offset w;
      w.reserve(u.size() + v.size());
      w.insert(w.end(), u.begin(), u.end());
      w.insert(w.end(), v.begin(), v.end());
      out[std::move(w)] += a * b;
    }
  }
  return Stencil(sx.dim() + sy.dim(), sx.h_power() + sy.h_power(), std::move(out));
}

Rational weight_sum(const Stencil& s) {
  Rational sum(0);
  for (const auto& [off, coeff] : s.entries()) sum += coeff;
  return sum;
}

}  // namespace stencilkit
