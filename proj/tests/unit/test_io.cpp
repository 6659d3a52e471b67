#include <doctest.h>

#include <random>
#include <sstream>

#include "stencilkit/generators.hpp"
#include "stencilkit/io.hpp"
#include "test_util.hpp"

using namespace stencilkit;
using testutil::random_stencil;

TEST_SUITE("io") {

TEST_CASE("stencil JSON round-trips exactly") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 25; ++trial) {
    Stencil s = random_stencil(rng, 1 + trial % 3);
    CHECK(stencil_from_json(stencil_to_json(s)) == s);
  }
}

TEST_CASE("stencil JSON format matches the documented shape") {
  Stencil s = make({.derivative = 1, .accuracy = 2});
  nlohmann::json j = stencil_to_json(s);
  CHECK(j["dim"] == 1);
  CHECK(j["h_power"] == -1);
  REQUIRE(j["entries"].size() == 2);
  // lexicographic offsets: -1 before +1
  CHECK(j["entries"][0]["offset"][0] == -1);
  CHECK(j["entries"][0]["num"] == -1);
  CHECK(j["entries"][0]["den"] == 2);
}

TEST_CASE("huge coefficients fall back to decimal strings") {
  Rational big(factorial(40));  // far beyond 64 bits
  Stencil s(1, 0, {{{0}, big}, {{1, }, Rational(1)}});
  nlohmann::json j = stencil_to_json(s);
  CHECK(j["entries"][0]["num"].is_string());
  CHECK(stencil_from_json(j) == s);
}

TEST_CASE("malformed stencil JSON is rejected") {
  CHECK_THROWS_AS(stencil_from_json(nlohmann::json{{"dim", 1}}), Error);
}

TEST_CASE("builtins load and the registry lists them") {
  for (const auto& name : builtin_stencil_names()) CHECK_NOTHROW(builtin_stencil(name));
  CHECK_THROWS_AS(builtin_stencil("no-such-stencil"), Error);
  Stencil chain = builtin_stencil("dx-dx-dxx");
  CHECK(chain.support(0) == std::pair<int, int>{-3, 3});
}

TEST_CASE("table JSON is sorted by order then lexicographically") {
  TaylorTable t = expand(builtin_stencil("dx-dx-dxx"), 8);
  nlohmann::json j = table_to_json(t);
  int last = -1;
  for (const auto& e : j["coeffs"]) {
    int order = 0;
    for (int v : e["alpha"].get<std::vector<int>>()) order += v;
    CHECK(order >= last);
    last = order;
  }
}

TEST_CASE("format_double round-trips doubles") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456789.123456789, -0.0155018}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

}  // TEST_SUITE
