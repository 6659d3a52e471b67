#include <doctest.h>

#include "stencilkit/rational.hpp"

using namespace stencilkit;

TEST_SUITE("rational") {

TEST_CASE("canonical form") {
  Rational r(2, 4);
  CHECK(r.num() == 1);
  CHECK(r.den() == 2);
  Rational neg(3, -6);
  CHECK(neg.num() == -1);
  CHECK(neg.den() == 2);  // denominator stays positive
  CHECK(Rational(0, 7) == Rational(0));
}

TEST_CASE("zero denominator rejected") {
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("arithmetic stays exact") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK((a - a).is_zero());
}

TEST_CASE("parsing and printing") {
  CHECK(Rational::from_string("-8/12") == Rational(-2, 3));
  CHECK(Rational::from_string("7") == Rational(7));
  CHECK(Rational(1, 6).str() == "1/6");
  CHECK(Rational(-4).str() == "-4");
  CHECK_THROWS_AS(Rational::from_string("x/y"), Error);
}

TEST_CASE("factorial and integer powers") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  // 21! overflows 64-bit; must stay exact
  CHECK(factorial(21) == Rational(1) * Rational(mpz_class("51090942171709440000"), mpz_class(1)));
  CHECK(int_pow(0, 0) == Rational(1));
  CHECK(int_pow(0, 3) == Rational(0));
  CHECK(int_pow(-2, 3) == Rational(-8));
  CHECK(int_pow(-2, 4) == Rational(16));
}

}  // TEST_SUITE
