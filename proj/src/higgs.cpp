#include "g2oct/higgs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace g2oct::higgs {
namespace {

constexpr int kSlots = 7;
constexpr unsigned kFullMask = (1u << kSlots) - 1;

const char* kSummandNames[kSlots] = {"B",     "BK^-1",  "K",    "O",
                                     "K^-1",  "B^-1K",  "B^-1"};

std::vector<std::pair<int, int>> arrow_list(bool beta, bool delta) {
  // Constant arrows are always present; beta and delta switch the rest.
  std::vector<std::pair<int, int>> arrows = {{0, 1}, {2, 3}, {3, 4}, {5, 6}};
  if (beta) {
    arrows.push_back({1, 2});
    arrows.push_back({4, 5});
  }
  if (delta) {
    arrows.push_back({5, 0});
    arrows.push_back({6, 1});
  }
  return arrows;
}

bool closed_under(unsigned mask, const std::vector<std::pair<int, int>>& arrows) {
  for (const auto& [src, dst] : arrows) {
    if ((mask >> src & 1u) && !(mask >> dst & 1u)) return false;
  }
  return true;
}

long mask_degree(unsigned mask, const std::array<long, 7>& degs) {
  long total = 0;
  for (int s = 0; s < kSlots; ++s) {
    if (mask >> s & 1u) total += degs[s];
  }
  return total;
}

std::string mask_name(unsigned mask) {
  std::string out;
  for (int s = 0; s < kSlots; ++s) {
    if (mask >> s & 1u) {
      if (!out.empty()) out += " + ";
      out += kSummandNames[s];
    }
  }
  return out;
}

std::string with_degree(const std::string& name, long deg) {
  std::ostringstream os;
  os << name << ", degree " << deg;
  return os.str();
}

bool in_range(int genus, int d) { return d >= 0 && d <= 6 * genus - 6; }

void require_genus(int genus) {
  if (genus < 2) throw std::invalid_argument("genus must be at least 2");
}

}  // namespace

int verdict_rank(Verdict v) {
  switch (v) {
    case Verdict::Unstable: return 0;
    case Verdict::NotPolystable: return 1;
    case Verdict::StrictlyPolystable: return 2;
    case Verdict::Stable: return 3;
    default: return -1;
  }
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::InvalidDegree: return "InvalidDegree";
    case Verdict::Unstable: return "Unstable";
    case Verdict::NotPolystable: return "NotPolystable";
    case Verdict::StrictlyPolystable: return "StrictlyPolystable";
    case Verdict::Stable: return "Stable";
  }
  return "?";
}

std::array<long, 7> summand_degrees(int genus, int d) {
  require_genus(genus);
  const long k = 2L * genus - 2;
  return {d, d - k, k, 0, -k, k - d, -d};
}

std::string summand_name(int slot) { return kSummandNames[slot]; }

StabilityResult classify(const HiggsDatum& datum) {
  require_genus(datum.genus);
  const int g = datum.genus;
  const int d = datum.d;
  StabilityResult out;
  if (!in_range(g, d)) {
    out.verdict = Verdict::InvalidDegree;
    out.witness = "no curves with this degree";
    return out;
  }
  const long two_gm2 = 2L * g - 2;
  if (datum.beta_nonzero && datum.delta_nonzero) {
    if (d > 0) {
      out.verdict = Verdict::Stable;
    } else {
      out.verdict = Verdict::StrictlyPolystable;
      out.witness = with_degree("kernel line of B + B^-1 -> BK^-1", 0);
    }
  } else if (datum.beta_nonzero) {  // delta == 0
    if (d > g - 1) {
      out.verdict = Verdict::Stable;
    } else if (d == g - 1) {
      out.verdict = Verdict::NotPolystable;
      out.witness = with_degree("B^-1K + B^-1", 0);
    } else {
      out.verdict = Verdict::Unstable;
      out.witness = with_degree("B^-1K + B^-1", two_gm2 - 2L * d);
    }
  } else if (datum.delta_nonzero) {  // beta == 0
    if (d < g - 1) {
      out.verdict = Verdict::StrictlyPolystable;
      out.witness = with_degree("K + O + K^-1", 0);
    } else if (d == g - 1) {
      // B + BK^-1 has degree 0 but an invariant complement would force
      // delta = 0, so the bundle is semistable without being polystable.
      out.verdict = Verdict::NotPolystable;
      out.witness = with_degree("B + BK^-1", 0);
    } else {
      out.verdict = Verdict::Unstable;
      out.witness = with_degree("B + BK^-1", 2L * d - two_gm2);
    }
  } else {  // beta == delta == 0
    if (d == g - 1) {
      out.verdict = Verdict::StrictlyPolystable;
      out.witness = "B + BK^-1, K + O + K^-1, B^-1K + B^-1 all of degree 0";
    } else if (d < g - 1) {
      out.verdict = Verdict::Unstable;
      out.witness = with_degree("B^-1K + B^-1", two_gm2 - 2L * d);
    } else {
      out.verdict = Verdict::Unstable;
      out.witness = with_degree("B + BK^-1", 2L * d - two_gm2);
    }
  }
  out.totally_geodesic =
      !datum.beta_nonzero && verdict_rank(out.verdict) >= 2;
  return out;
}

StabilityResult enumeration_oracle(const HiggsDatum& datum) {
  require_genus(datum.genus);
  const int g = datum.genus;
  const int d = datum.d;
  StabilityResult out;
  if (!in_range(g, d)) {
    out.verdict = Verdict::InvalidDegree;
    out.witness = "no curves with this degree";
    return out;
  }
  const auto degs = summand_degrees(g, d);
  const auto arrows = arrow_list(datum.beta_nonzero, datum.delta_nonzero);

  struct Candidate {
    long degree;
    bool has_complement;
    std::string name;
  };
  std::vector<Candidate> candidates;
  for (unsigned mask = 1; mask < kFullMask; ++mask) {
    if (!closed_under(mask, arrows)) continue;
    const unsigned comp = kFullMask & ~mask;
    candidates.push_back(
        {mask_degree(mask, degs), closed_under(comp, arrows), mask_name(mask)});
  }
  if (datum.delta_nonzero) {
    // The two arrows out of B and B^-1 both land in BK^-1; their kernel is a
    // line subbundle of B + B^-1 isomorphic to B^-1 (the constant arrow is
    // invertible).  It is killed by the Higgs field, hence invariant, and has
    // an invariant complement exactly when delta trivializes B^2 (d = 0).
    candidates.push_back(
        {-static_cast<long>(d), d == 0, "kernel line of B + B^-1 -> BK^-1"});
  }

  long max_degree = candidates.empty() ? -1 : candidates[0].degree;
  for (const auto& c : candidates) max_degree = std::max(max_degree, c.degree);

  if (!candidates.empty() && max_degree > 0) {
    out.verdict = Verdict::Unstable;
    for (const auto& c : candidates) {
      if (c.degree == max_degree) {
        out.witness = with_degree(c.name, c.degree);
        break;
      }
    }
  } else if (candidates.empty() || max_degree < 0) {
    out.verdict = Verdict::Stable;
  } else {
    // Semistable with at least one degree-zero invariant subbundle; the
    // bundle is polystable iff every such subbundle splits off.
    const Candidate* obstruction = nullptr;
    const Candidate* splitter = nullptr;
    for (const auto& c : candidates) {
      if (c.degree != 0) continue;
      if (c.has_complement) {
        if (!splitter) splitter = &c;
      } else if (!obstruction) {
        obstruction = &c;
      }
    }
    if (obstruction) {
      out.verdict = Verdict::NotPolystable;
      out.witness = with_degree(obstruction->name, 0);
    } else {
      out.verdict = Verdict::StrictlyPolystable;
      out.witness = with_degree(splitter->name, 0);
    }
  }
  out.totally_geodesic =
      !datum.beta_nonzero && verdict_rank(out.verdict) >= 2;
  return out;
}

long geodesic_euler_class(int genus, int d) {
  require_genus(genus);
  return genus - 1 - d;
}

SectionCount h0_dim(int genus, long degree, bool canonical) {
  require_genus(genus);
  if (canonical) {
    if (degree != 2L * genus - 2) {
      throw std::invalid_argument("canonical bundle has degree 2g-2");
    }
    return {true, genus};
  }
  if (degree < 0) return {true, 0};
  if (degree > 2L * genus - 2) return {true, degree - genus + 1};
  return {false, 0};
}

ModuliDescription moduli_description(int genus, int d) {
  require_genus(genus);
  ModuliDescription out;
  if (!in_range(genus, d)) {
    out.empty = true;
    out.text = "empty";
    return out;
  }
  const long g = genus;
  out.total_dim = d + 8 * g - 8;
  out.fiber_dim = d + 5 * g - 5;
  out.components = (d == 0) ? (1L << (2 * g)) : 1;
  std::ostringstream os;
  if (d >= g) {
    out.high_regime = true;
    out.sym_degree = 6 * g - 6 - d;
    out.cover_order = 1;
    out.bundle_rank = 2L * d - g + 1;
    os << "rank " << out.bundle_rank << " vector bundle over Sym^"
       << out.sym_degree;
  } else {
    out.high_regime = false;
    out.sym_degree = 2L * d;
    out.cover_order = 1L << (2 * g);
    out.cone_dim = 5 * g - 5 - d;
    os << "(C^" << out.cone_dim << " \\ 0)/+- over a " << out.cover_order
       << "-fold cover of Sym^" << out.sym_degree;
  }
  os << "; dimension " << out.total_dim << " (" << 3 * g - 3 << " + "
     << out.fiber_dim << ")";
  if (d == 0) os << "; " << out.components << " components";
  out.text = os.str();
  return out;
}

HitchinLocusReport hitchin_locus_check(int genus) {
  require_genus(genus);
  const long g = genus;
  HitchinLocusReport out;
  out.d = 6 * g - 6;
  out.b_vs_k3_degree = 3 * (2 * g - 2) - out.d;
  const SectionCount k6 = h0_dim(genus, 6 * (2 * g - 2));
  out.parameter_dim = k6.dim;  // 12g - 12 - g + 1 = 11g - 11
  out.total_dim = (3 * g - 3) + out.parameter_dim;
  const ModuliDescription top = moduli_description(genus, static_cast<int>(out.d));
  out.consistent = k6.determined && out.b_vs_k3_degree == 0 &&
                   out.parameter_dim == 11 * g - 11 &&
                   out.total_dim == top.total_dim &&
                   top.bundle_rank == out.parameter_dim && top.sym_degree == 0;
  return out;
}

certify::Certificate stability_certificate() {
  certify::Certificate cert{"cyclic Higgs bundle stability and moduli"};

  // Closed-form classification vs brute-force enumeration.
  {
    bool agree = true;
    std::string detail;
    for (int g = 2; g <= 4 && agree; ++g) {
      for (int d = -2; d <= 6 * g - 4 && agree; ++d) {
        for (int flags = 0; flags < 4 && agree; ++flags) {
          HiggsDatum datum{g, d, (flags & 1) != 0, (flags & 2) != 0};
          const auto a = classify(datum);
          const auto b = enumeration_oracle(datum);
          if (a.verdict != b.verdict || a.totally_geodesic != b.totally_geodesic) {
            agree = false;
            std::ostringstream os;
            os << "mismatch at g=" << g << " d=" << d
               << " beta=" << datum.beta_nonzero
               << " delta=" << datum.delta_nonzero << ": "
               << verdict_name(a.verdict) << " vs " << verdict_name(b.verdict);
            detail = os.str();
          }
        }
      }
    }
    cert.add("classification matches subbundle enumeration (g=2..4)", agree,
             detail);
  }

  // Pinned sample verdicts.
  cert.add("g=2 d=4 beta,delta generic: stable",
           classify({2, 4, true, false}).verdict == Verdict::Stable &&
               classify({2, 4, true, true}).verdict == Verdict::Stable);
  {
    const auto r = classify({2, 1, true, false});
    cert.add("g=2 d=1 delta=0: semistable but not polystable",
             r.verdict == Verdict::NotPolystable &&
                 r.witness == "B^-1K + B^-1, degree 0",
             r.witness);
  }
  cert.add("g=2 d=0 generic: strictly polystable",
           classify({2, 0, true, true}).verdict == Verdict::StrictlyPolystable);
  cert.add("degree outside [0,6g-6] rejected",
           classify({2, -1, true, true}).verdict == Verdict::InvalidDegree &&
               classify({2, 7, true, true}).verdict == Verdict::InvalidDegree);

  // Monotonicity in delta, away from the known exceptional point
  // (beta=0, d=g-1), where switching delta on breaks the splitting.
  {
    bool mono = true;
    bool exception_seen = true;
    for (int g = 2; g <= 4; ++g) {
      for (int d = 0; d <= 6 * g - 6; ++d) {
        for (int beta = 0; beta <= 1; ++beta) {
          const int r0 = verdict_rank(classify({g, d, beta != 0, false}).verdict);
          const int r1 = verdict_rank(classify({g, d, beta != 0, true}).verdict);
          if (beta == 0 && d == g - 1) {
            exception_seen = exception_seen && r0 > r1;
          } else {
            mono = mono && r1 >= r0;
          }
        }
      }
    }
    cert.add("turning delta on never destabilizes (beta!=0 or d!=g-1)", mono);
    cert.add("beta=0 d=g-1: delta!=0 breaks the polystable splitting",
             exception_seen);
  }

  // beta=0 polystable representatives exist exactly for 0 <= d <= g-1.
  {
    bool ok = true;
    for (int g = 2; g <= 5 && ok; ++g) {
      for (int d = 0; d <= 6 * g - 6 && ok; ++d) {
        const bool exists =
            verdict_rank(classify({g, d, false, true}).verdict) >= 2 ||
            verdict_rank(classify({g, d, false, false}).verdict) >= 2;
        ok = exists == (d <= g - 1);
      }
    }
    cert.add("beta=0 polystable exactly in degrees 0..g-1", ok);
  }

  // Moduli dimension identities.
  {
    bool ok = true;
    for (int g = 2; g <= 10 && ok; ++g) {
      for (int d = 0; d <= 6 * g - 6 && ok; ++d) {
        const auto m = moduli_description(g, d);
        const long fiber_from_parts =
            m.high_regime ? m.sym_degree + m.bundle_rank
                          : m.sym_degree + m.cone_dim;
        ok = !m.empty && m.total_dim == d + 8L * g - 8 &&
             m.total_dim == (3L * g - 3) + m.fiber_dim &&
             m.fiber_dim == fiber_from_parts &&
             m.components == ((d == 0) ? (1L << (2 * g)) : 1);
      }
    }
    cert.add("moduli dimension bookkeeping (g=2..10)", ok);
  }
  {
    const auto m = moduli_description(2, 6);
    cert.add("g=2 top degree: dimension 14, rank 11 over a point",
             m.total_dim == 14 && m.bundle_rank == 11 && m.sym_degree == 0);
  }
  {
    const auto m = moduli_description(2, 0);
    cert.add("g=2 degree 0: dimension 8, 16 components",
             m.total_dim == 8 && m.components == 16);
  }
  {
    const auto m = moduli_description(3, 2);
    cert.add("g=3 degree 2: punctured C^8 cone over 64-fold cover of Sym^4",
             !m.high_regime && m.cone_dim == 8 && m.cover_order == 64 &&
                 m.sym_degree == 4);
  }

  // Section counts.
  cert.add("h^0 in the unconditional ranges",
           h0_dim(2, 12).determined && h0_dim(2, 12).dim == 11 &&
               h0_dim(3, -1).determined && h0_dim(3, -1).dim == 0 &&
               !h0_dim(2, 1).determined &&
               h0_dim(2, 2, true).dim == 2);

  // Top-degree component.
  {
    bool ok = true;
    for (int g = 2; g <= 6; ++g) {
      const auto r = hitchin_locus_check(g);
      ok = ok && r.consistent && r.parameter_dim == 11L * g - 11;
    }
    const auto r2 = hitchin_locus_check(2);
    cert.add("top degree forces B=K^3 with an 11g-11 dimensional parameter",
             ok && r2.parameter_dim == 11 && r2.total_dim == 14);
  }

  return cert;
}

}  // namespace g2oct::higgs
