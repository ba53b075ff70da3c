#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2oct/octonion.hpp"

using namespace g2oct::oct;
using g2oct::exact::Scalar;

TEST_CASE("basis products of the split presentation") {
  // l^2 = -1, (eps l)^2 = +1, j^2 = -1, delta^2 = +1.
  auto sq = [](int k) { return mul(Octonion::unit(k), Octonion::unit(k)); };
  CHECK(sq(4).re() == Scalar(-1));
  CHECK(sq(7).re() == Scalar(1));
  CHECK(sq(1).re() == Scalar(-1));
  CHECK(sq(2).re() == Scalar(1));
}

TEST_CASE("two presentations agree on all basis pairs") {
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const Octonion x = Octonion::unit(a), y = Octonion::unit(b);
      CHECK(mul(x, y) == mul_via_quaternions(x, y));
    }
}

TEST_CASE("f-basis table matches the frozen reference") {
  const auto computed = f_mult_table();
  const auto ref = f_mult_table_reference();
  for (size_t a = 0; a < 7; ++a)
    for (size_t b = 0; b < 7; ++b)
      for (size_t k = 0; k < 7; ++k) {
        INFO("a=", a, " b=", b, " k=", k);
        CHECK(computed[a][b][k] == ref[a][b][k]);
      }
}

TEST_CASE("distinguished scalar values") {
  const auto f = f_basis();
  CHECK(omega(ImVec::unit(0), ImVec::unit(1), ImVec::unit(2)) == Scalar(1));
  CHECK(omega(f[0], f[4], f[5]) == Scalar::sqrt2());
  CHECK(quad(f[3]) == Scalar(-1));
  // l x jl = j.
  CHECK(cross(ImVec::unit(3), ImVec::unit(4)) == ImVec::unit(0));
}

TEST_CASE("full algebra certificate passes") {
  const auto cert = algebra_certificate();
  for (const auto& c : cert.checks) {
    INFO(c.name, " :: ", c.detail);
    CHECK(c.pass);
  }
}
