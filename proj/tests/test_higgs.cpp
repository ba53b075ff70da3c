#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <chrono>

#include "doctest.h"
#include "g2oct/higgs.hpp"

using namespace g2oct;
using higgs::HiggsDatum;
using higgs::Verdict;

TEST_CASE("summand degrees sum to zero and are antisymmetric") {
  for (int g = 2; g <= 5; ++g) {
    for (int d = 0; d <= 6 * g - 6; ++d) {
      const auto degs = higgs::summand_degrees(g, d);
      long total = 0;
      for (long x : degs) total += x;
      CHECK(total == 0);
      for (int s = 0; s < 7; ++s) CHECK(degs[s] == -degs[6 - s]);
    }
  }
}

TEST_CASE("pinned verdicts") {
  CHECK(higgs::classify({2, 4, true, false}).verdict == Verdict::Stable);
  const auto r = higgs::classify({2, 1, true, false});
  CHECK(r.verdict == Verdict::NotPolystable);
  CHECK(r.witness == "B^-1K + B^-1, degree 0");
  CHECK(higgs::classify({2, 0, true, true}).verdict ==
        Verdict::StrictlyPolystable);
  CHECK(higgs::classify({2, -1, true, true}).verdict == Verdict::InvalidDegree);
  CHECK(higgs::classify({2, 7, false, false}).verdict ==
        Verdict::InvalidDegree);
  CHECK_THROWS(higgs::classify({1, 0, true, true}));
}

TEST_CASE("classification agrees with the enumeration oracle") {
  const auto start = std::chrono::steady_clock::now();
  for (int g = 2; g <= 4; ++g) {
    for (int d = -2; d <= 6 * g - 4; ++d) {
      for (int flags = 0; flags < 4; ++flags) {
        HiggsDatum datum{g, d, (flags & 1) != 0, (flags & 2) != 0};
        const auto a = higgs::classify(datum);
        const auto b = higgs::enumeration_oracle(datum);
        CAPTURE(g);
        CAPTURE(d);
        CAPTURE(datum.beta_nonzero);
        CAPTURE(datum.delta_nonzero);
        CHECK(a.verdict == b.verdict);
        CHECK(a.totally_geodesic == b.totally_geodesic);
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  CHECK(secs < 1.0);
}

TEST_CASE("delta monotonicity and its single exceptional point") {
  for (int g = 2; g <= 5; ++g) {
    for (int d = 0; d <= 6 * g - 6; ++d) {
      for (int beta = 0; beta <= 1; ++beta) {
        const int r0 =
            higgs::verdict_rank(higgs::classify({g, d, beta != 0, false}).verdict);
        const int r1 =
            higgs::verdict_rank(higgs::classify({g, d, beta != 0, true}).verdict);
        if (beta == 0 && d == g - 1) {
          // Here delta=0 splits the bundle into three polystable pieces while
          // any nonzero delta glues B + BK^-1 in without a complement.
          CHECK(r0 == higgs::verdict_rank(Verdict::StrictlyPolystable));
          CHECK(r1 == higgs::verdict_rank(Verdict::NotPolystable));
        } else {
          CHECK(r1 >= r0);
        }
      }
    }
  }
}

TEST_CASE("beta=0 polystable range and geodesic annotation") {
  for (int g = 2; g <= 5; ++g) {
    for (int d = 0; d <= 6 * g - 6; ++d) {
      const auto with_delta = higgs::classify({g, d, false, true});
      const auto without = higgs::classify({g, d, false, false});
      const bool polystable_exists =
          higgs::verdict_rank(with_delta.verdict) >= 2 ||
          higgs::verdict_rank(without.verdict) >= 2;
      CHECK(polystable_exists == (d <= g - 1));
      CHECK(with_delta.totally_geodesic ==
            (higgs::verdict_rank(with_delta.verdict) >= 2));
    }
  }
  CHECK(higgs::geodesic_euler_class(3, 1) == 1);
}

TEST_CASE("section counts") {
  CHECK(higgs::h0_dim(2, 12).dim == 11);
  CHECK(higgs::h0_dim(3, -1).dim == 0);
  CHECK_FALSE(higgs::h0_dim(2, 1).determined);
  CHECK_FALSE(higgs::h0_dim(2, 2).determined);
  CHECK(higgs::h0_dim(2, 2, true).dim == 2);
  CHECK(higgs::h0_dim(4, 6, true).dim == 4);
  CHECK_THROWS(higgs::h0_dim(2, 3, true));
}

TEST_CASE("moduli descriptions") {
  const auto top = higgs::moduli_description(2, 6);
  CHECK(top.high_regime);
  CHECK(top.total_dim == 14);
  CHECK(top.bundle_rank == 11);
  CHECK(top.sym_degree == 0);

  const auto zero = higgs::moduli_description(2, 0);
  CHECK_FALSE(zero.high_regime);
  CHECK(zero.total_dim == 8);
  CHECK(zero.components == 16);

  const auto low = higgs::moduli_description(3, 2);
  CHECK(low.cone_dim == 8);
  CHECK(low.cover_order == 64);
  CHECK(low.sym_degree == 4);

  CHECK(higgs::moduli_description(2, 7).empty);

  for (int g = 2; g <= 10; ++g) {
    for (int d = 0; d <= 6 * g - 6; ++d) {
      const auto m = higgs::moduli_description(g, d);
      CHECK(m.total_dim == d + 8L * g - 8);
      CHECK(m.total_dim == 3L * g - 3 + m.fiber_dim);
      const long parts = m.high_regime ? m.sym_degree + m.bundle_rank
                                       : m.sym_degree + m.cone_dim;
      CHECK(m.fiber_dim == parts);
    }
  }
}

TEST_CASE("top-degree locus") {
  for (int g = 2; g <= 6; ++g) {
    const auto r = higgs::hitchin_locus_check(g);
    CHECK(r.consistent);
    CHECK(r.b_vs_k3_degree == 0);
    CHECK(r.parameter_dim == 11L * g - 11);
  }
}

TEST_CASE("full certificate passes") {
  const auto cert = higgs::stability_certificate();
  CHECK(cert.all_pass());
  for (const auto& c : cert.checks) {
    if (!c.pass) MESSAGE(c.name, ": ", c.detail);
  }
}
