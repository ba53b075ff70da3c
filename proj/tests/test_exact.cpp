#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2oct/exact.hpp"
#include "g2oct/exact_linalg.hpp"

using g2oct::exact::Matrix;
using g2oct::exact::Rational;
using g2oct::exact::Scalar;

TEST_CASE("field axioms and basic identities") {
  const Scalar i = Scalar::i(), s = Scalar::sqrt2();
  CHECK(i * i == Scalar(-1));
  CHECK(s * s == Scalar(2));
  CHECK(Scalar::i_sqrt2() == i * s);
  CHECK(Scalar::i_sqrt2() * Scalar::i_sqrt2() == Scalar(-2));
  CHECK(Scalar::inv_sqrt2() * s == Scalar(1));

  // Distributivity / commutativity spot checks with mixed components.
  const Scalar x(Rational(3, 2), Rational(-1, 3), Rational(0), Rational(5, 7));
  const Scalar y(Rational(-2), Rational(1, 2), Rational(4, 5), Rational(1));
  const Scalar z(Rational(1, 9), Rational(2), Rational(-3), Rational(1, 2));
  CHECK(x * y == y * x);
  CHECK(x * (y + z) == x * y + x * z);
  CHECK((x * y) * z == x * (y * z));
}

TEST_CASE("inverse and conjugations") {
  const Scalar x(Rational(3, 2), Rational(-1, 3), Rational(2, 5), Rational(5, 7));
  CHECK(x * x.inverse() == Scalar(1));
  CHECK(x.conj_i().conj_i() == x);
  CHECK(x.conj_sqrt2().conj_sqrt2() == x);
  CHECK((x * x.conj_i()).is_real());
  CHECK_THROWS(Scalar(0).inverse());

  // Galois conjugations are ring homomorphisms.
  const Scalar y(Rational(-1), Rational(4), Rational(1, 2), Rational(0));
  CHECK((x * y).conj_i() == x.conj_i() * y.conj_i());
  CHECK((x * y).conj_sqrt2() == x.conj_sqrt2() * y.conj_sqrt2());
}

TEST_CASE("sign of real elements") {
  // 3 - 2 sqrt2 < 0 since 9 < 8 is false -> compare: 3^2=9 > 2*(2^2)=8, so
  // the rational part wins: sign +1.
  CHECK(Scalar(Rational(3), Rational(0), Rational(-2), Rational(0)).sign() == 1);
  // 1 - sqrt2 < 0.
  CHECK(Scalar(Rational(1), Rational(0), Rational(-1), Rational(0)).sign() == -1);
  CHECK(Scalar(0).sign() == 0);
  CHECK_THROWS(Scalar::i().sign());
}

TEST_CASE("kernel, rank, solve") {
  // 2x3 rank-2 matrix: kernel is 1-dimensional.
  Matrix a(2, 3);
  a(0, 0) = Scalar(1); a(0, 1) = Scalar(2); a(0, 2) = Scalar(3);
  a(1, 0) = Scalar(0); a(1, 1) = Scalar::sqrt2(); a(1, 2) = Scalar(1);
  CHECK(a.rank() == 2);
  const Matrix k = a.kernel();
  CHECK(k.cols() == 1);
  CHECK((a * k).is_zero());

  // Consistent and inconsistent systems.
  Matrix b(2, 1);
  b(0, 0) = Scalar(1);
  b(1, 0) = Scalar::i();
  auto x = a.solve(b);
  REQUIRE(x.has_value());
  CHECK(a * *x == b);

  Matrix c(3, 1);
  c(0, 0) = Scalar(1);
  Matrix at = a.transpose();  // 3x2, column space is 2-dim in Q^3
  Matrix rhs(3, 1);
  rhs(0, 0) = Scalar(1); rhs(1, 0) = Scalar(0); rhs(2, 0) = Scalar(0);
  // Generic rhs is typically out of span; verify solve reports consistency
  // exactly by reconstruction when it succeeds.
  auto y = at.solve(rhs);
  if (y) CHECK(at * *y == rhs);
}

TEST_CASE("symmetric inertia") {
  // diag(2, -3, 0) -> (1, 1, 1).
  Matrix m(3, 3);
  m(0, 0) = Scalar(2);
  m(1, 1) = Scalar(-3);
  auto in = g2oct::exact::symmetric_inertia(m);
  CHECK(in.positive == 1);
  CHECK(in.negative == 1);
  CHECK(in.zero == 1);

  // Hyperbolic plane [[0,1],[1,0]] -> (1, 1, 0).
  Matrix h(2, 2);
  h(0, 1) = Scalar(1);
  h(1, 0) = Scalar(1);
  in = g2oct::exact::symmetric_inertia(h);
  CHECK(in.positive == 1);
  CHECK(in.negative == 1);

  // Indefinite with sqrt2 entries: [[1, s],[s, 1]] has det 1-2 < 0 -> (1,1).
  Matrix s2(2, 2);
  s2(0, 0) = Scalar(1); s2(0, 1) = Scalar::sqrt2();
  s2(1, 0) = Scalar::sqrt2(); s2(1, 1) = Scalar(1);
  in = g2oct::exact::symmetric_inertia(s2);
  CHECK(in.positive == 1);
  CHECK(in.negative == 1);
}
