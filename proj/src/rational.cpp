#include "stencilkit/rational.hpp"

#include <ostream>

namespace stencilkit {

Rational Rational::from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s), mpz_class(1));
    return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(Errc::invalid_argument, "cannot parse rational '" + s + "'");
  }
}

std::string Rational::str() const {
  if (den() == 1) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f, mpz_class(1));
}

Rational int_pow(long base, unsigned exp) {
  if (exp == 0) return Rational(1);
  mpz_class b(base), r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return Rational(r, mpz_class(1));
}

}  // namespace stencilkit
