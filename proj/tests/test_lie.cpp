#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2oct/lie.hpp"

using namespace g2oct::lie;
using g2oct::exact::Scalar;
using g2oct::oct::ImVec;

TEST_CASE("dimension counts") {
  CHECK(derivation_basis().size() == 14);
  CHECK(so43_basis().size() == 21);
  const CartanSplit s = cartan_split();
  CHECK(s.k.size() == 6);
  CHECK(s.p.size() == 8);
  CHECK(stabilizer_of_vector(ImVec::unit(0)).size() == 8);
  CHECK(stabilizer_of_vector(ImVec::unit(1)).size() == 8);
  CHECK(stabilizer_of_splitting().size() == 6);
}

TEST_CASE("cross operators are derivations iff inner ones vanish") {
  // ad_z(w) = z x w is NOT a derivation of the cross product in general
  // (Im(O') is not a Lie algebra), but every derivation annihilates q.
  for (const auto& x : derivation_basis()) CHECK(is_derivation(x));
}

TEST_CASE("killing signature") {
  const auto sig = killing_signature();
  CHECK(sig.positive == 8);
  CHECK(sig.negative == 6);
  CHECK(sig.zero == 0);
}

TEST_CASE("graded structure") {
  const auto& d = graded();
  CHECK(d.torus.size() == 2);
  CHECK(d.roots.size() == 12);
  CHECK(d.grade_spaces[1].size() == 3);
  // eta is the longest root with length 5 and grade 1.
  bool found_eta = false;
  for (const auto& r : d.roots)
    if (r.n == 3 && r.m == 2) {
      found_eta = true;
      CHECK(r.grade == 1);
    }
  CHECK(found_eta);
}

TEST_CASE("g1 family shape") {
  const auto phi = g1_element(Scalar(1), Scalar(0), Scalar(0));
  CHECK(phi(3, 2) == Scalar(1));
  CHECK(phi(4, 3) == Scalar(1));
  const Scalar kappa = phi(1, 0);
  CHECK(kappa * kappa == Scalar::frac(-1, 2));
}

TEST_CASE("full lie certificate passes") {
  const auto cert = lie_certificate();
  for (const auto& c : cert.checks) {
    INFO(c.name, " :: ", c.detail);
    CHECK(c.pass);
  }
}
