// Acceptance gate: one pass/fail line per top-level criterion, exit 0 iff
// all pass.  Each criterion re-derives its expectations independently of the
// module under test (exact certificates, brute-force enumeration, method of
// manufactured solutions, analytic oracles).

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "g2oct/frenet.hpp"
#include "g2oct/higgs.hpp"
#include "g2oct/hitchin.hpp"
#include "g2oct/lie.hpp"
#include "g2oct/octonion.hpp"

using namespace g2oct;
using hitchin::Complex;
using hitchin::MetricGrid;
using hitchin::SolverProblem;

namespace {

int g_failures = 0;

void criterion(int n, const std::string& name, bool pass,
               const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", n,
              name.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

constexpr double kPi = 3.14159265358979323846;

double mms_u1(double x, double y) { return 0.2 * std::sin(kPi * x) * std::cos(kPi * y); }
double mms_u3(double x, double y) {
  return 0.1 + 0.15 * std::cos(kPi * x) * std::sin(kPi * y);
}

SolverProblem mms_problem(int n) {
  SolverProblem p;
  p.nx = p.ny = n;
  p.b_coeffs = {Complex(1.0, 0.0), Complex(0.3, 0.1)};
  p.dd_coeffs = {Complex(0.8, 0.2)};
  p.u1_boundary = mms_u1;
  p.u3_boundary = mms_u3;
  p.source1 = [&p](double x, double y) {
    const double b2 = std::norm(p.b_at(Complex(x, y)));
    const double u1 = mms_u1(x, y), u3 = mms_u3(x, y);
    return -2.0 * kPi * kPi * u1 / 4.0 -
           (std::exp(u1) - b2 * std::exp(u3 - 2.0 * u1));
  };
  p.source3 = [&p](double x, double y) {
    const double dd2 = std::norm(p.dd_at(Complex(x, y)));
    const double u1 = mms_u1(x, y), u3 = mms_u3(x, y);
    return -2.0 * kPi * kPi * (u3 - 0.1) / 4.0 -
           (0.5 * std::exp(u1) - dd2 * std::exp(u1 - 2.0 * u3));
  };
  return p;
}

struct MmsRun {
  double err = 0;
  bool ok = false;  // converged with matrix residual within 10x scalar tol
};

MmsRun mms_run(int n) {
  SolverProblem p = mms_problem(n);
  hitchin::SolveReport rep;
  const MetricGrid g = hitchin::newton_solve(p, &rep);
  MmsRun out;
  out.ok = rep.converged && rep.matrix_residual <= 10.0 * p.tol;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      out.err = std::max(out.err, std::abs(g.at1(i, j) - mms_u1(g.x(i), g.y(j))));
      out.err = std::max(out.err, std::abs(g.at3(i, j) - mms_u3(g.x(i), g.y(j))));
    }
  return out;
}

SolverProblem constant_problem(int n) {
  SolverProblem p;
  p.nx = p.ny = n;
  p.b_coeffs = {Complex(1.0, 0.0)};
  p.dd_coeffs = {Complex(1.0, 0.0)};
  double c1 = 0, c3 = 0;
  hitchin::constant_balance(p.b_coeffs[0], p.dd_coeffs[0], &c1, &c3);
  p.u1_boundary = [c1](double, double) { return c1; };
  p.u3_boundary = [c3](double, double) { return c3; };
  return p;
}

struct CurveRun {
  double qf = 0, tang = 0, meanc = 0;
  int rank2 = 0, degen = 0;
  bool rank_ok = false;
};

CurveRun curve_run(int n) {
  const SolverProblem p = constant_problem(n);
  const MetricGrid g = hitchin::newton_solve(p);
  const auto conn = frenet::assemble_flat_connection(p, g);
  const auto curve = frenet::reconstruct_curve(conn);
  const auto chk = frenet::curve_checks(curve, conn, p);
  CurveRun out;
  out.qf = curve.worst_qf;
  out.tang = chk.tangency_defect;
  out.meanc = chk.mean_curvature_defect;
  out.rank2 = chk.rank2_points;
  out.degen = chk.degenerate_points;
  for (const auto& c : chk.cert.checks)
    if (c.name == "second form rank 2 and negative where b is not small")
      out.rank_ok = c.pass;
  return out;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

int main() {
  // 1. Exact algebra certificate.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto cert = oct::algebra_certificate();
    const double dt = seconds_since(t0);
    criterion(1, "exact split-octonion algebra certificate",
              cert.all_pass() && dt < 5.0,
              std::to_string(cert.checks.size()) + " checks, " +
                  std::to_string(cert.failures()) + " failures, " + fmt(dt) +
                  " s (budget 5)");
  }

  // 2. Exact Lie-theory certificate.
  {
    const auto t0 = std::chrono::steady_clock::now();
    const auto cert = lie::lie_certificate();
    const double dt = seconds_since(t0);
    criterion(2, "exact Lie-theory certificate",
              cert.all_pass() && dt < 30.0,
              std::to_string(cert.checks.size()) + " checks, " +
                  std::to_string(cert.failures()) + " failures, " + fmt(dt) +
                  " s (budget 30)");
  }

  // 3. Stability closed form == brute-force enumeration.
  {
    const auto t0 = std::chrono::steady_clock::now();
    int cases = 0, mismatches = 0;
    for (int g = 2; g <= 4; ++g)
      for (int d = -2; d <= 6 * g - 4; ++d)
        for (int f = 0; f < 4; ++f) {
          const higgs::HiggsDatum datum{g, d, (f & 1) != 0, (f & 2) != 0};
          ++cases;
          if (higgs::classify(datum).verdict !=
              higgs::enumeration_oracle(datum).verdict)
            ++mismatches;
        }
    const double dt = seconds_since(t0);
    criterion(3, "stability verdicts match subbundle enumeration",
              mismatches == 0 && dt < 1.0,
              std::to_string(cases) + " cases, " +
                  std::to_string(mismatches) + " mismatches, " + fmt(dt) +
                  " s (budget 1)");
  }

  // 4. Moduli dimension arithmetic.
  {
    bool ok = true;
    for (int g = 2; g <= 10; ++g) {
      for (int d = 0; d <= 6 * g - 6; ++d) {
        const auto m = higgs::moduli_description(g, d);
        ok = ok && !m.empty && m.total_dim == d + 8L * g - 8 &&
             m.total_dim == (3L * g - 3) + m.fiber_dim;
        if (m.high_regime)
          ok = ok && m.bundle_rank == 2L * d - g + 1 &&
               m.sym_degree == 6L * g - 6 - d;
        else
          ok = ok && m.cone_dim == 5L * g - 5 - d && m.sym_degree == 2L * d;
        ok = ok && (d == 0 ? m.components == (1L << (2 * g))
                           : m.components == 1);
      }
      ok = ok && higgs::hitchin_locus_check(g).consistent;
    }
    criterion(4, "moduli dimensions and component counts", ok,
              "genus 2..10, all degrees");
  }

  // 5. Solver convergence (manufactured solution + constant oracle).
  {
    const auto t0 = std::chrono::steady_clock::now();
    const MmsRun r1 = mms_run(33);
    const MmsRun r2 = mms_run(65);
    const auto t128 = std::chrono::steady_clock::now();
    const MmsRun r3 = mms_run(129);
    const double dt128 = seconds_since(t128);
    const double p12 = std::log2(r1.err / r2.err);
    const double p23 = std::log2(r2.err / r3.err);

    SolverProblem pc = constant_problem(65);
    double c1 = 0, c3 = 0;
    hitchin::constant_balance(pc.b_coeffs[0], pc.dd_coeffs[0], &c1, &c3);
    const MetricGrid gc = hitchin::newton_solve(pc);
    double cdev = 0;
    for (size_t k = 0; k < gc.u1.size(); ++k) {
      cdev = std::max(cdev, std::abs(gc.u1[k] - c1));
      cdev = std::max(cdev, std::abs(gc.u3[k] - c3));
    }
    const bool ok = r1.ok && r2.ok && r3.ok && p12 >= 1.9 && p23 >= 1.9 &&
                    cdev < 1e-10 && dt128 < 120.0;
    criterion(5, "solver convergence order and oracles", ok,
              "orders " + fmt(p12) + ", " + fmt(p23) +
                  "; constant-oracle deviation " + fmt(cdev) + "; 128^2 in " +
                  fmt(dt128) + " s (budget 120); total " +
                  fmt(seconds_since(t0)) + " s");
  }

  // 6. Curve reconstruction identities and degenerations.
  {
    const CurveRun c65 = curve_run(65);
    const CurveRun c129 = curve_run(129);
    const double ord_t = std::log2(c65.tang / c129.tang);
    const double ord_m = std::log2(c65.meanc / c129.meanc);
    bool ok = c129.qf < 1e-5 && c129.tang < 1e-4 && c129.meanc < 1e-4 &&
              ord_t >= 1.9 && ord_m >= 1.9 && c129.rank_ok &&
              c129.rank2 > 0 && c129.degen == 0;

    // b identically zero: the curve is confined to the 3-dimensional
    // associative slice (last four coordinates vanish).
    SolverProblem pz;
    pz.nx = pz.ny = 65;
    pz.b_coeffs = {Complex(0.0, 0.0)};
    pz.dd_coeffs = {Complex(1.0, 0.0)};
    pz.u1_boundary = hitchin::disk_log_metric;
    pz.u3_boundary = [](double, double) { return 0.5 * std::log(2.0); };
    const MetricGrid gz = hitchin::newton_solve(pz);
    const auto connz = frenet::assemble_flat_connection(pz, gz);
    const auto curvez = frenet::reconstruct_curve(connz);
    const auto chkz = frenet::curve_checks(curvez, connz, pz);
    ok = ok && chkz.slice_residue < 1e-5;

    criterion(6, "curve reconstruction identities", ok,
              "qf " + fmt(c129.qf) + ", tangency " + fmt(c129.tang) +
                  ", mean curvature " + fmt(c129.meanc) + ", orders " +
                  fmt(ord_t) + "/" + fmt(ord_m) + ", rank-2 points " +
                  std::to_string(c129.rank2) + ", slice residue " +
                  fmt(chkz.slice_residue));
  }

  // 7. Gauge covariance of the metric.
  {
    SolverProblem p;
    p.nx = p.ny = 65;
    p.b_coeffs = {Complex(1.0, 0.2), Complex(0.1, 0.0)};
    p.dd_coeffs = {Complex(0.7, -0.3)};
    double c1 = 0, c3 = 0;
    hitchin::constant_balance(p.b_coeffs[0], p.dd_coeffs[0], &c1, &c3);
    p.u1_boundary = [c1](double, double) { return c1; };
    p.u3_boundary = [c3](double, double) { return c3; };
    const MetricGrid g = hitchin::newton_solve(p);

    const Complex lambda = std::polar(1.0, 0.61);
    SolverProblem q = p;
    for (auto& c : q.b_coeffs) c *= lambda;
    for (auto& c : q.dd_coeffs) c *= 1.0 / (lambda * lambda);
    const MetricGrid gq = hitchin::newton_solve(q);
    double dev = 0;
    for (size_t k = 0; k < g.u1.size(); ++k) {
      dev = std::max(dev, std::abs(g.u1[k] - gq.u1[k]));
      dev = std::max(dev, std::abs(g.u3[k] - gq.u3[k]));
    }
    criterion(7, "gauge covariance (lambda b, lambda^-2 dd)", dev < 1e-9,
              "sup deviation " + fmt(dev));
  }

  std::printf("%s: %d criterion failure%s\n",
              g_failures == 0 ? "ACCEPTED" : "REJECTED", g_failures,
              g_failures == 1 ? "" : "s");
  return g_failures == 0 ? 0 : 1;
}
