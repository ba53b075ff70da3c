// Python bindings for the main operations: exact-layer certificates,
// stability/moduli arithmetic, the harmonic-metric solver, and curve
// reconstruction with its geometric checks.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "g2oct/certify.hpp"
#include "g2oct/frenet.hpp"
#include "g2oct/higgs.hpp"
#include "g2oct/hitchin.hpp"
#include "g2oct/lie.hpp"
#include "g2oct/octonion.hpp"

namespace py = pybind11;
using namespace g2oct;

PYBIND11_MODULE(_g2oct, m) {
  m.doc() =
      "split-octonion / G2' toolkit: exact algebra certificates, cyclic "
      "Higgs bundle stability, harmonic-metric solver, curve reconstruction";

  py::class_<certify::Check>(m, "Check")
      .def_readonly("name", &certify::Check::name)
      .def_readonly("passed", &certify::Check::pass)
      .def_readonly("detail", &certify::Check::detail)
      .def("__repr__", [](const certify::Check& c) {
        return "<Check " + c.name + ": " + (c.pass ? "pass" : "FAIL") + ">";
      });
  py::class_<certify::Certificate>(m, "Certificate")
      .def_readonly("title", &certify::Certificate::title)
      .def_readonly("checks", &certify::Certificate::checks)
      .def("all_pass", &certify::Certificate::all_pass)
      .def("failures", &certify::Certificate::failures);

  m.def("algebra_certificate", &oct::algebra_certificate,
        "Exact certificate for the split-octonion algebra layer");
  m.def("lie_certificate", &lie::lie_certificate,
        "Exact certificate for the G2' Lie-theory layer");
  m.def("stability_certificate", &higgs::stability_certificate,
        "Certificate sweeping stability verdicts and moduli arithmetic");

  py::enum_<higgs::Verdict>(m, "Verdict")
      .value("InvalidDegree", higgs::Verdict::InvalidDegree)
      .value("Unstable", higgs::Verdict::Unstable)
      .value("NotPolystable", higgs::Verdict::NotPolystable)
      .value("StrictlyPolystable", higgs::Verdict::StrictlyPolystable)
      .value("Stable", higgs::Verdict::Stable);
  py::class_<higgs::HiggsDatum>(m, "HiggsDatum")
      .def(py::init([](int genus, int d, bool beta_nonzero, bool delta_nonzero) {
             return higgs::HiggsDatum{genus, d, beta_nonzero, delta_nonzero};
           }),
           py::arg("genus"), py::arg("d"), py::arg("beta_nonzero") = true,
           py::arg("delta_nonzero") = true)
      .def_readwrite("genus", &higgs::HiggsDatum::genus)
      .def_readwrite("d", &higgs::HiggsDatum::d)
      .def_readwrite("beta_nonzero", &higgs::HiggsDatum::beta_nonzero)
      .def_readwrite("delta_nonzero", &higgs::HiggsDatum::delta_nonzero);
  py::class_<higgs::StabilityResult>(m, "StabilityResult")
      .def_readonly("verdict", &higgs::StabilityResult::verdict)
      .def_readonly("witness", &higgs::StabilityResult::witness)
      .def_readonly("totally_geodesic",
                    &higgs::StabilityResult::totally_geodesic);
  m.def("classify", &higgs::classify, "Closed-form stability verdict");
  m.def("enumeration_oracle", &higgs::enumeration_oracle,
        "Brute-force stability verdict from subbundle enumeration");
  m.def("verdict_name", &higgs::verdict_name);
  m.def("summand_degrees", &higgs::summand_degrees);

  py::class_<higgs::ModuliDescription>(m, "ModuliDescription")
      .def_readonly("empty", &higgs::ModuliDescription::empty)
      .def_readonly("high_regime", &higgs::ModuliDescription::high_regime)
      .def_readonly("total_dim", &higgs::ModuliDescription::total_dim)
      .def_readonly("fiber_dim", &higgs::ModuliDescription::fiber_dim)
      .def_readonly("sym_degree", &higgs::ModuliDescription::sym_degree)
      .def_readonly("cover_order", &higgs::ModuliDescription::cover_order)
      .def_readonly("bundle_rank", &higgs::ModuliDescription::bundle_rank)
      .def_readonly("cone_dim", &higgs::ModuliDescription::cone_dim)
      .def_readonly("components", &higgs::ModuliDescription::components)
      .def_readonly("text", &higgs::ModuliDescription::text);
  m.def("moduli_description", &higgs::moduli_description, py::arg("genus"),
        py::arg("d"));

  py::class_<hitchin::SolverProblem>(m, "SolverProblem")
      .def(py::init<>())
      .def_readwrite("x0", &hitchin::SolverProblem::x0)
      .def_readwrite("x1", &hitchin::SolverProblem::x1)
      .def_readwrite("y0", &hitchin::SolverProblem::y0)
      .def_readwrite("y1", &hitchin::SolverProblem::y1)
      .def_readwrite("nx", &hitchin::SolverProblem::nx)
      .def_readwrite("ny", &hitchin::SolverProblem::ny)
      .def_readwrite("b_coeffs", &hitchin::SolverProblem::b_coeffs)
      .def_readwrite("dd_coeffs", &hitchin::SolverProblem::dd_coeffs)
      .def_readwrite("tol", &hitchin::SolverProblem::tol)
      .def_readwrite("max_iter", &hitchin::SolverProblem::max_iter)
      .def_readwrite("u1_boundary", &hitchin::SolverProblem::u1_boundary)
      .def_readwrite("u3_boundary", &hitchin::SolverProblem::u3_boundary);
  py::class_<hitchin::MetricGrid>(m, "MetricGrid")
      .def_readonly("nx", &hitchin::MetricGrid::nx)
      .def_readonly("ny", &hitchin::MetricGrid::ny)
      .def_readonly("u1", &hitchin::MetricGrid::u1)
      .def_readonly("u3", &hitchin::MetricGrid::u3);
  py::class_<hitchin::SolveReport>(m, "SolveReport")
      .def_readonly("converged", &hitchin::SolveReport::converged)
      .def_readonly("iterations", &hitchin::SolveReport::iterations)
      .def_readonly("final_residual", &hitchin::SolveReport::final_residual)
      .def_readonly("matrix_residual", &hitchin::SolveReport::matrix_residual);
  m.def("constant_balance",
        [](std::complex<double> b, std::complex<double> dd) {
          double u1 = 0, u3 = 0;
          const bool ok = hitchin::constant_balance(b, dd, &u1, &u3);
          return py::make_tuple(ok, u1, u3);
        });
  m.def(
      "newton_solve",
      [](const hitchin::SolverProblem& p) {
        hitchin::SolveReport rep;
        hitchin::MetricGrid g = hitchin::newton_solve(p, &rep);
        return py::make_tuple(g, rep);
      },
      py::arg("problem"), "Solve the harmonic-metric equations");

  py::class_<frenet::FlatConnection>(m, "FlatConnection")
      .def_readonly("plaquette_defect", &frenet::FlatConnection::plaquette_defect)
      .def_readonly("reality_defect", &frenet::FlatConnection::reality_defect);
  py::class_<frenet::CurveGrid>(m, "CurveGrid")
      .def_readonly("nx", &frenet::CurveGrid::nx)
      .def_readonly("ny", &frenet::CurveGrid::ny)
      .def_readonly("f", &frenet::CurveGrid::f)
      .def_readonly("qf", &frenet::CurveGrid::qf)
      .def_readonly("worst_qf", &frenet::CurveGrid::worst_qf);
  py::class_<frenet::CurveChecks>(m, "CurveChecks")
      .def_readonly("cert", &frenet::CurveChecks::cert)
      .def_readonly("tangency_defect", &frenet::CurveChecks::tangency_defect)
      .def_readonly("mean_curvature_defect",
                    &frenet::CurveChecks::mean_curvature_defect)
      .def_readonly("rank2_points", &frenet::CurveChecks::rank2_points)
      .def_readonly("degenerate_points",
                    &frenet::CurveChecks::degenerate_points)
      .def_readonly("slice_residue", &frenet::CurveChecks::slice_residue);
  m.def("assemble_flat_connection", &frenet::assemble_flat_connection,
        py::arg("problem"), py::arg("metric"), py::arg("residual_tol") = 1e-6);
  m.def(
      "reconstruct_curve",
      [](const frenet::FlatConnection& conn) {
        return frenet::reconstruct_curve(conn);
      },
      py::arg("connection"));
  m.def("curve_checks", &frenet::curve_checks, py::arg("curve"),
        py::arg("connection"), py::arg("problem"),
        py::arg("interior_margin") = 1);
}
