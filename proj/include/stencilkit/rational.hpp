#ifndef STENCILKIT_RATIONAL_HPP
#define STENCILKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "stencilkit/error.hpp"

namespace stencilkit {

/// Exact rational, always in lowest terms with positive denominator.
/// Backed by GMP so coefficient cancellation is detected exactly.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw Error(Errc::zero_denominator, "rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  /// Parses "n" or "n/d" (arbitrary precision).
  static Rational from_string(const std::string& s);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  double to_double() const { return v_.get_d(); }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error(Errc::zero_denominator, "division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}  // arithmetic results are canonical
  mpq_class v_;
};

Rational factorial(unsigned n);

/// base^exp as an exact rational; 0^0 = 1.
Rational int_pow(long base, unsigned exp);

}  // namespace stencilkit

#endif
