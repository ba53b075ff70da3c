// Stability classification and moduli arithmetic for the cyclic family of
// rank-7 Higgs bundles built from a line bundle B of degree d on a genus-g
// surface:
//
//   B -> BK^-1 -> K -> O -> K^-1 -> B^-1K -> B^-1
//
// with unit-scale arrows between consecutive summands (the B -> BK^-1 and
// B^-1K -> B^-1 arrows carry a fixed nonzero constant, the middle two carry
// 1, the remaining two carry the section beta of B^-1K^3) and two returning
// arrows B^-1K -> B, B^-1 -> BK^-1 carrying the section delta of B^2.
//
// Everything in this module is integer arithmetic in (g, d) plus the two
// flags "beta vanishes identically" / "delta vanishes identically".

#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2oct/certify.hpp"

namespace g2oct::higgs {

enum class Verdict {
  InvalidDegree,
  Unstable,
  NotPolystable,       // semistable, not polystable
  StrictlyPolystable,  // polystable, not stable
  Stable,
};

// Rank used by the monotonicity property: Unstable(0) < NotPolystable(1) <
// StrictlyPolystable(2) < Stable(3).  InvalidDegree maps to -1.
int verdict_rank(Verdict v);
std::string verdict_name(Verdict v);

struct HiggsDatum {
  int genus = 2;
  int d = 0;  // degree of B
  bool beta_nonzero = true;
  bool delta_nonzero = true;
};

struct StabilityResult {
  Verdict verdict = Verdict::InvalidDegree;
  // Destabilizing / decomposing subbundle description, when applicable.
  std::string witness;
  // Set when beta == 0 and the bundle is polystable: the corresponding
  // harmonic map is a totally geodesic disk.
  bool totally_geodesic = false;
};

// Degrees of the seven line summands in the order
// (B, BK^-1, K, O, K^-1, B^-1K, B^-1).
std::array<long, 7> summand_degrees(int genus, int d);
std::string summand_name(int slot);

// Closed-form case analysis.
StabilityResult classify(const HiggsDatum& datum);

// Brute force: enumerate the subsets of the seven summands closed under the
// arrow graph (plus the kernel line of the two arrows into BK^-1 when
// delta != 0), score their degrees, and check degree-zero candidates for
// invariant complements.
StabilityResult enumeration_oracle(const HiggsDatum& datum);

// Euler class of the second SL(2,R) factor of the totally geodesic (beta=0)
// representations.
long geodesic_euler_class(int genus, int d);

// h^0 of a line bundle of the given degree: degree - g + 1 above 2g-2, zero
// below 0, g for the canonical bundle itself; otherwise undetermined (the
// answer depends on the bundle, not just its degree).
struct SectionCount {
  bool determined = false;
  long dim = 0;
};
SectionCount h0_dim(int genus, long degree, bool canonical = false);

// Shape of the moduli space of curves with fixed (g, d).
struct ModuliDescription {
  bool empty = false;        // d outside [0, 6g-6]
  bool high_regime = false;  // g <= d <= 6g-6
  long total_dim = 0;        // d + 8g - 8
  long fiber_dim = 0;        // d + 5g - 5 (fiber over Teichmueller space)
  long sym_degree = 0;       // symmetric-product degree of the base
  long cover_order = 1;      // order of the covering group of the base
  long bundle_rank = 0;      // high regime: rank 2d - g + 1 vector bundle
  long cone_dim = 0;         // low regime: (C^{5g-5-d} \ {0}) / +-1 fiber
  long components = 1;       // 2^{2g} at d = 0, 1 otherwise
  std::string text;
};
ModuliDescription moduli_description(int genus, int d);

// Degree bookkeeping at the top degree d = 6g-6: B is forced to be K^3 and
// the component is a vector space of dimension h^0(K^6) = 11g - 11.
struct HitchinLocusReport {
  long d = 0;                 // 6g - 6
  long b_vs_k3_degree = 0;    // deg(B^-1 K^3) = 0
  long parameter_dim = 0;     // 11g - 11
  long total_dim = 0;         // (3g-3) + (11g-11) = d + 8g - 8
  bool consistent = false;
};
HitchinLocusReport hitchin_locus_check(int genus);

// Sweeps the oracle-vs-classify comparison, the frozen examples, the
// monotonicity property, and the moduli dimension identities.
certify::Certificate stability_certificate();

}  // namespace g2oct::higgs
