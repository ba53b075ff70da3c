#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <cstdio>

#include "doctest.h"
#include "g2oct/hitchin.hpp"

using namespace g2oct;
using hitchin::Complex;
using hitchin::MetricGrid;
using hitchin::SolverProblem;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Manufactured fields and their z-zbar Laplacians.
double mms_u1(double x, double y) { return 0.2 * std::sin(kPi * x) * std::cos(kPi * y); }
double mms_u3(double x, double y) {
  return 0.1 + 0.15 * std::cos(kPi * x) * std::sin(kPi * y);
}
double mms_lap1(double x, double y) {
  return -2.0 * kPi * kPi * mms_u1(x, y) / 4.0;
}
double mms_lap3(double x, double y) {
  return -2.0 * kPi * kPi * (mms_u3(x, y) - 0.1) / 4.0;
}

SolverProblem mms_problem(int n) {
  SolverProblem p;
  p.nx = p.ny = n;
  p.b_coeffs = {Complex(1.0, 0.0), Complex(0.3, 0.1)};
  p.dd_coeffs = {Complex(0.8, 0.2)};
  p.u1_boundary = mms_u1;
  p.u3_boundary = mms_u3;
  p.source1 = [&p](double x, double y) {
    const Complex z(x, y);
    const double b2 = std::norm(p.b_at(z));
    const double u1 = mms_u1(x, y), u3 = mms_u3(x, y);
    return mms_lap1(x, y) -
           (std::exp(u1) - b2 * std::exp(u3 - 2.0 * u1));
  };
  p.source3 = [&p](double x, double y) {
    const Complex z(x, y);
    const double dd2 = std::norm(p.dd_at(z));
    const double u1 = mms_u1(x, y), u3 = mms_u3(x, y);
    return mms_lap3(x, y) -
           (0.5 * std::exp(u1) - dd2 * std::exp(u1 - 2.0 * u3));
  };
  return p;
}

double mms_error(int n) {
  SolverProblem p = mms_problem(n);
  hitchin::SolveReport rep;
  const MetricGrid g = hitchin::newton_solve(p, &rep);
  REQUIRE(rep.converged);
  double err = 0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      err = std::max(err, std::abs(g.at1(i, j) - mms_u1(g.x(i), g.y(j))));
      err = std::max(err, std::abs(g.at3(i, j) - mms_u3(g.x(i), g.y(j))));
    }
  return err;
}

}  // namespace

TEST_CASE("constant coefficients: algebraic balance is an exact solution") {
  SolverProblem p;
  p.nx = p.ny = 17;
  double c1 = 0, c3 = 0;
  REQUIRE(hitchin::constant_balance(Complex(1, 0), Complex(1, 0), &c1, &c3));
  CHECK(c3 == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-14));
  CHECK(c1 == doctest::Approx(c3 / 3.0).epsilon(1e-14));

  MetricGrid g = MetricGrid::zeros(p);
  std::fill(g.u1.begin(), g.u1.end(), c1);
  std::fill(g.u3.begin(), g.u3.end(), c3);
  const auto res = hitchin::assemble_residual(p, g);
  CHECK(res.scalar_sup < 1e-12);
  CHECK(res.matrix_sup < 1e-12);  // off-diagonal slots cancel identically
}

TEST_CASE("constant-coefficient solve matches the balance oracle") {
  SolverProblem p;
  p.nx = p.ny = 33;
  p.b_coeffs = {Complex(1.0, 0.0)};
  p.dd_coeffs = {Complex(1.0, 0.0)};
  double c1 = 0, c3 = 0;
  hitchin::constant_balance(p.b_coeffs[0], p.dd_coeffs[0], &c1, &c3);
  p.u1_boundary = [c1](double, double) { return c1; };
  p.u3_boundary = [c3](double, double) { return c3; };
  hitchin::SolveReport rep;
  const MetricGrid g = hitchin::newton_solve(p, &rep);
  CHECK(rep.converged);
  double dev = 0;
  for (size_t k = 0; k < g.u1.size(); ++k) {
    dev = std::max(dev, std::abs(g.u1[k] - c1));
    dev = std::max(dev, std::abs(g.u3[k] - c3));
  }
  CHECK(dev < 1e-10);
  CHECK(rep.matrix_residual <= 10.0 * p.tol);
}

TEST_CASE("manufactured residual reproduces the injected source") {
  SolverProblem p = mms_problem(33);
  auto s1 = p.source1;
  auto s3 = p.source3;
  p.source1 = nullptr;
  p.source3 = nullptr;
  MetricGrid g = MetricGrid::zeros(p);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      g.at1(i, j) = mms_u1(g.x(i), g.y(j));
      g.at3(i, j) = mms_u3(g.x(i), g.y(j));
    }
  const auto res = hitchin::assemble_residual(p, g);
  const double h2 = g.hx * g.hx;
  double worst = 0;
  for (int j = 1; j + 1 < g.ny; ++j)
    for (int i = 1; i + 1 < g.nx; ++i) {
      const size_t k = static_cast<size_t>(j) * g.nx + i;
      worst = std::max(worst, std::abs(res.r1[k] - s1(g.x(i), g.y(j))));
      worst = std::max(worst, std::abs(res.r3[k] - s3(g.x(i), g.y(j))));
    }
  CHECK(worst < 5.0 * h2);  // second-order consistency
}

TEST_CASE("manufactured-solution convergence is second order") {
  const double e1 = mms_error(17);
  const double e2 = mms_error(33);
  const double e3 = mms_error(65);
  const double p12 = std::log2(e1 / e2);
  const double p23 = std::log2(e2 / e3);
  CAPTURE(e1);
  CAPTURE(e2);
  CAPTURE(e3);
  CHECK(p12 >= 1.9);
  CHECK(p23 >= 1.9);
}

TEST_CASE("decoupled b=dd=0 solve recovers the disk metric") {
  SolverProblem p;
  p.nx = p.ny = 65;
  p.b_coeffs = {Complex(0.0, 0.0)};
  p.dd_coeffs = {Complex(0.0, 0.0)};
  p.u1_boundary = hitchin::disk_log_metric;
  p.u3_boundary = [](double, double) { return 0.0; };
  hitchin::SolveReport rep;
  const MetricGrid g = hitchin::newton_solve(p, &rep);
  CHECK(rep.converged);
  double err = 0;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      err = std::max(err,
                     std::abs(g.at1(i, j) -
                              hitchin::disk_log_metric(g.x(i), g.y(j))));
  CHECK(err < 2e-4);  // discretization-limited (second order)

  // Refinement halves h; the recovery error drops at order >= 1.9.
  SolverProblem p2 = p;
  p2.nx = p2.ny = 129;
  const MetricGrid g2 = hitchin::newton_solve(p2, &rep);
  double err2 = 0;
  for (int j = 0; j < g2.ny; ++j)
    for (int i = 0; i < g2.nx; ++i)
      err2 = std::max(err2,
                      std::abs(g2.at1(i, j) -
                               hitchin::disk_log_metric(g2.x(i), g2.y(j))));
  CHECK(std::log2(err / err2) >= 1.9);
}

TEST_CASE("gauge scaling (lambda b, lambda^-2 dd) leaves the metric fixed") {
  SolverProblem p;
  p.nx = p.ny = 33;
  p.b_coeffs = {Complex(1.0, 0.2), Complex(0.1, 0.0)};
  p.dd_coeffs = {Complex(0.7, -0.3)};
  double c1 = 0, c3 = 0;
  hitchin::constant_balance(p.b_coeffs[0], p.dd_coeffs[0], &c1, &c3);
  p.u1_boundary = [c1](double, double) { return c1; };
  p.u3_boundary = [c3](double, double) { return c3; };
  hitchin::SolveReport rep;
  const MetricGrid g = hitchin::newton_solve(p, &rep);
  REQUIRE(rep.converged);

  const Complex lambda = std::polar(1.0, 0.73);
  SolverProblem q = p;
  for (auto& c : q.b_coeffs) c *= lambda;
  for (auto& c : q.dd_coeffs) c *= 1.0 / (lambda * lambda);
  const MetricGrid gq = hitchin::newton_solve(q, &rep);
  REQUIRE(rep.converged);
  double dev = 0;
  for (size_t k = 0; k < g.u1.size(); ++k) {
    dev = std::max(dev, std::abs(g.u1[k] - gq.u1[k]));
    dev = std::max(dev, std::abs(g.u3[k] - gq.u3[k]));
  }
  CHECK(dev < 1e-9);

  // Sixth-root rotation of the whole Higgs field: same equations, same metric.
  SolverProblem r = p;
  const Complex zeta = std::polar(1.0, kPi / 3.0);
  for (auto& c : r.b_coeffs) c *= zeta;
  for (auto& c : r.dd_coeffs) c *= zeta;
  const MetricGrid gr = hitchin::newton_solve(r, &rep);
  REQUIRE(rep.converged);
  dev = 0;
  for (size_t k = 0; k < g.u1.size(); ++k) {
    dev = std::max(dev, std::abs(g.u1[k] - gr.u1[k]));
    dev = std::max(dev, std::abs(g.u3[k] - gr.u3[k]));
  }
  CHECK(dev < 1e-9);
}

TEST_CASE("serial determinism: repeated solves are bitwise identical") {
  SolverProblem p = mms_problem(17);
  const MetricGrid a = hitchin::newton_solve(p);
  const MetricGrid b = hitchin::newton_solve(p);
  CHECK(a.u1 == b.u1);
  CHECK(a.u3 == b.u3);
}

TEST_CASE("metric export round trip") {
  SolverProblem p;
  p.nx = p.ny = 9;
  double c1 = 0, c3 = 0;
  hitchin::constant_balance(Complex(1, 0), Complex(1, 0), &c1, &c3);
  p.u1_boundary = [c1](double, double) { return c1; };
  p.u3_boundary = [c3](double, double) { return c3; };
  hitchin::SolveReport rep;
  const MetricGrid g = hitchin::newton_solve(p, &rep);
  const std::string path = "test_metric_roundtrip.csv";
  hitchin::export_metric(p, g, rep, path);
  const MetricGrid h = hitchin::import_metric(path);
  CHECK(h.nx == g.nx);
  CHECK(h.u1 == g.u1);
  CHECK(h.u3 == g.u3);
  const auto ra = hitchin::assemble_residual(p, g);
  const auto rb = hitchin::assemble_residual(p, h);
  CHECK(ra.scalar_sup == rb.scalar_sup);
  std::remove(path.c_str());
}

TEST_CASE("non-convergence is reported, not hidden") {
  SolverProblem p = mms_problem(17);
  p.max_iter = 1;
  p.tol = 1e-14;
  hitchin::SolveReport rep;
  hitchin::newton_solve(p, &rep);
  CHECK_FALSE(rep.converged);
  CHECK(rep.history.size() >= 1);
}

TEST_CASE("malformed problems are rejected") {
  SolverProblem p;
  p.nx = 4;
  CHECK_THROWS(hitchin::newton_solve(p));
  p.nx = 33;
  p.tol = 0;
  CHECK_THROWS(hitchin::newton_solve(p));
  CHECK_FALSE(hitchin::constant_balance(Complex(0, 0), Complex(1, 0), nullptr,
                                        nullptr));
}
