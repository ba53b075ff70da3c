// Finite-difference Newton solver for the harmonic-metric equation
// F_h + [Phi, Phi*_h] = 0 of the cyclic rank-7 Higgs field on a planar chart.
//
// In the chart the holomorphic frame splits into the seven line slots
// (L_-3, ..., L_3) = (B, BK^-1, K, O, K^-1, B^-1K, B^-1) and the Higgs field
// is the nilpotent-plus-return-arrows matrix with slot constants kappa =
// -i/sqrt2, unit middle arrows, and the polynomial coefficients b(z), dd(z).
// A diagonal metric exp(w_a) with w = (-u3, u1-u3, -u1, 0, u1, u3-u1, u3)
// reduces the matrix equation to two real scalar equations
//
//   (u1)_{z zbar} = e^{u1} - |b|^2  e^{u3 - 2 u1}
//   (u3)_{z zbar} = e^{u1}/2 - |dd|^2 e^{u1 - 2 u3}
//
// which are discretized with second-order central differences and Dirichlet
// boundary data and solved by a damped Newton iteration with a sparse direct
// factorization.  The full 7x7 matrix residual is always assembled
// independently as a cross-check on the reduction.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace g2oct::hitchin {

using Complex = std::complex<double>;
using Mat7 = std::array<std::array<Complex, 7>, 7>;

// The constant in the B -> BK^-1 and B^-1K -> B^-1 slots (from the exact
// root normalization; only |kappa|^2 = 1/2 enters the scalar equations).
inline Complex slot_constant() { return Complex(0.0, -1.0 / std::sqrt(2.0)); }

Complex eval_poly(const std::vector<Complex>& coeffs, Complex z);

struct SolverProblem {
  double x0 = -0.5, x1 = 0.5, y0 = -0.5, y1 = 0.5;
  int nx = 33, ny = 33;  // grid points including the boundary
  std::vector<Complex> b_coeffs{Complex(1.0, 0.0)};
  std::vector<Complex> dd_coeffs{Complex(1.0, 0.0)};
  double tol = 1e-10;  // residual sup-norm target
  int max_iter = 50;
  // Dirichlet data; when unset, the constant-balance values at the domain
  // center are used (constants must then be balanceable).
  std::function<double(double, double)> u1_boundary;
  std::function<double(double, double)> u3_boundary;
  // Optional manufactured sources subtracted from the residuals.
  std::function<double(double, double)> source1;
  std::function<double(double, double)> source3;

  Complex b_at(Complex z) const { return eval_poly(b_coeffs, z); }
  Complex dd_at(Complex z) const { return eval_poly(dd_coeffs, z); }
  std::string hash() const;  // stable fingerprint of the problem data
};

struct MetricGrid {
  int nx = 0, ny = 0;
  double x0 = 0, y0 = 0, hx = 0, hy = 0;
  std::vector<double> u1, u3;  // row-major, index j*nx + i

  static MetricGrid zeros(const SolverProblem& p);
  double x(int i) const { return x0 + i * hx; }
  double y(int j) const { return y0 + j * hy; }
  double& at1(int i, int j) { return u1[static_cast<size_t>(j) * nx + i]; }
  double& at3(int i, int j) { return u3[static_cast<size_t>(j) * nx + i]; }
  double at1(int i, int j) const { return u1[static_cast<size_t>(j) * nx + i]; }
  double at3(int i, int j) const { return u3[static_cast<size_t>(j) * nx + i]; }
  // Log-weights w_a of the seven slots at a grid point.
  std::array<double, 7> log_weights(int i, int j) const;
};

// Higgs field matrix in the holomorphic chart frame at given coefficient
// values; entry (row, col) maps slot col -> slot row.
Mat7 phi_matrix(Complex b, Complex dd);

struct ResidualReport {
  double sup1 = 0, sup3 = 0;  // scalar residual sup-norms over the interior
  double scalar_sup = 0;      // max(sup1, sup3)
  double matrix_sup = 0;      // sup-norm of the full 7x7 residual
  std::vector<double> r1, r3;  // residual grids (zero on the boundary)
};
ResidualReport assemble_residual(const SolverProblem& p, const MetricGrid& g);

struct SolveReport {
  bool converged = false;
  int iterations = 0;
  std::vector<double> history;  // residual sup-norm after each iteration
  double final_residual = 0;
  double matrix_residual = 0;
  std::string note;
};

// Damped Newton iteration from the given initial grid (or the default
// initialization when absent).  Throws std::invalid_argument on malformed
// problems; non-convergence is reported, not thrown.
MetricGrid newton_solve(const SolverProblem& p, SolveReport* report = nullptr,
                        const MetricGrid* initial = nullptr);

// Constant solution of the zero-residual balance (needs b != 0 and dd != 0):
// u3 = log(2 |dd|^2)/2,  u1 = (2 log|b| + u3)/3.  Returns false otherwise.
bool constant_balance(Complex b, Complex dd, double* u1, double* u3);

// log of the Poincare-type metric weight 2/(1-|z|^2)^2 solving
// u_{z zbar} = e^u on the unit disk (the decoupled b = dd = 0 equation).
double disk_log_metric(double x, double y);

// CSV with columns x, y, u1, u3, residual; '#' header lines carry the
// problem fingerprint, tolerance and convergence flag.
void export_metric(const SolverProblem& p, const MetricGrid& g,
                   const SolveReport& r, const std::string& path);
// Re-reads grids written by export_metric (full precision round trip).
MetricGrid import_metric(const std::string& path);

}  // namespace g2oct::hitchin
