// Curve reconstruction from a solved harmonic metric: assembles the flat
// connection D = d + (metric log-derivative diagonal) + Phi dz + Phi* dzbar
// in the unitary chart frame, parallel-transports the frame over the grid,
// extracts the real middle-slot section as a map into the q = -1 quadric of
// Im(O'), and verifies the differential-geometric identities of the curve
// (J-tangency, vanishing mean curvature, rank-2 negative-definite second
// fundamental form, the third-form cross-product identity, and the
// totally-geodesic degenerations).

#pragma once

#include <array>
#include <string>
#include <vector>

#include "g2oct/certify.hpp"
#include "g2oct/hitchin.hpp"

namespace g2oct::frenet {

using hitchin::Complex;
using hitchin::Mat7;

struct FlatConnection {
  int nx = 0, ny = 0;
  double x0 = 0, y0 = 0, hx = 0, hy = 0;
  std::vector<Mat7> ax, ay;  // connection coefficients per grid point
  double metric_residual = 0;    // scalar Hitchin residual of the input
  double plaquette_defect = 0;   // sup-norm holonomy defect per grid cell
  double reality_defect = 0;     // sup-norm of N conj(A) N - A (N = flip)

  const Mat7& Ax(int i, int j) const { return ax[static_cast<size_t>(j) * nx + i]; }
  const Mat7& Ay(int i, int j) const { return ay[static_cast<size_t>(j) * nx + i]; }
};

// Refuses (throws std::runtime_error) when the metric's scalar residual
// exceeds residual_tol: flatness needs the Hitchin equation.
FlatConnection assemble_flat_connection(const hitchin::SolverProblem& p,
                                        const hitchin::MetricGrid& g,
                                        double residual_tol = 1e-6);

struct CurveGrid {
  int nx = 0, ny = 0;
  double x0 = 0, y0 = 0, hx = 0, hy = 0;
  // Curve samples in the real basis (j, delta, eps, l, jl, deltal, epsl).
  std::vector<std::array<double, 7>> f;
  std::vector<double> qf;       // q(f, f) per sample
  double worst_qf = 0;          // max |q(f)+1|
  double imag_residue = 0;      // worst imaginary part before projection
  double q_parallel_defect = 0;     // transport defect of the bilinear form
  double cross_parallel_defect = 0; // transport defect of the cross product
  double path_dependence = 0;       // two-path transport disagreement

  const std::array<double, 7>& at(int i, int j) const {
    return f[static_cast<size_t>(j) * nx + i];
  }
  double x(int i) const { return x0 + i * hx; }
  double y(int j) const { return y0 + j * hy; }
};

// basepoint_frame, when given, rotates the identification of the basepoint
// fiber with Im(O') (columns act on r-coordinates); the curve moves by it.
CurveGrid reconstruct_curve(const FlatConnection& conn,
                            const std::array<std::array<double, 7>, 7>*
                                basepoint_frame = nullptr);

struct CurveChecks {
  certify::Certificate cert;
  double tangency_defect = 0;       // f_y vs f x f_x
  double conformal_defect = 0;
  double mean_curvature_defect = 0;
  double ii_complex_linear_defect = 0;  // II o J_T vs J_N o II
  double iii_cross_defect = 0;          // III''(X,nu) + (i/2) X x nu
  double duality_defect = 0;            // -g_N(II(X,Y),nu) = g_T(Y,S2(X,nu))
  double iii_symmetry_defect = 0;       // III(.,II(.,.)) symmetric
  int rank2_points = 0;             // samples with negative-definite rank-2 II
  int degenerate_points = 0;        // samples below the degeneracy threshold
  double slice_residue = 0;         // b == 0: components outside Im(H')
};
// interior_margin skips that many grid rings next to the boundary; artificial
// Dirichlet data produces corner layers whose finite-difference error decays
// into the bulk, so bulk identities are measured away from the edge.
CurveChecks curve_checks(const CurveGrid& curve, const FlatConnection& conn,
                         const hitchin::SolverProblem& p,
                         int interior_margin = 1);

struct GeodesicReport {
  bool parallel_line_found = false;
  double min_singular = 0;    // smallest singular value of the constraints
  double orthogonality = 0;   // max |q(f, v)| for the candidate axis
  double axis_q = 0;          // q(v, v) of the candidate (positive = found)
  std::array<double, 7> axis{};
};
// Searches for a q-positive vector orthogonal to the whole curve (the curve
// then lies in a totally geodesic copy of the smaller pseudohyperbolic
// space).  Absence is a structural report, not a failure.
GeodesicReport geodesic_h32_check(const CurveGrid& curve);

// CSV with columns x, y, f1..f7, qf.
void export_curve(const CurveGrid& curve, const std::string& path);

}  // namespace g2oct::frenet
