#include "g2oct/frenet.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "g2oct/octonion.hpp"

namespace g2oct::frenet {
namespace {

using M7 = Eigen::Matrix<Complex, 7, 7>;
using V7 = Eigen::Matrix<Complex, 7, 1>;

M7 to_eigen(const Mat7& m) {
  M7 out;
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) out(a, b) = m[a][b];
  return out;
}

Mat7 from_eigen(const M7& m) {
  Mat7 out{};
  for (int a = 0; a < 7; ++a)
    for (int b = 0; b < 7; ++b) out[a][b] = m(a, b);
  return out;
}

// Antilinear real-structure flip in the unitary frame: (N v)_a = v_{6-a}.
M7 flip_matrix() {
  M7 n = M7::Zero();
  for (int a = 0; a < 7; ++a) n(a, 6 - a) = 1.0;
  return n;
}

// Floating-point copies of the exact algebra structure.
struct AlgebraTables {
  M7 p, pinv;              // f-coords -> r-coords and back
  M7 qf;                   // Gram of q in the f-basis
  std::array<double, 7> qr;  // diagonal Gram of q in the r-basis
  // r-basis cross structure constants: cross_r[a][b] = e_a x e_b coords.
  std::array<std::array<std::array<double, 7>, 7>, 7> cross_r;
  // f-basis structure constants.
  std::array<std::array<std::array<Complex, 7>, 7>, 7> cross_f;
};

const AlgebraTables& tables() {
  static const AlgebraTables t = [] {
    AlgebraTables a;
    const auto& p = oct::f_change_of_basis();
    const auto& pinv = oct::f_change_of_basis_inv();
    const auto qf = oct::q_gram_f();
    const auto qr = oct::q_gram_r();
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        a.p(i, j) = p(i, j).to_complex();
        a.pinv(i, j) = pinv(i, j).to_complex();
        a.qf(i, j) = qf(i, j).to_complex();
      }
    for (int i = 0; i < 7; ++i) a.qr[i] = qr(i, i).to_complex().real();
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) {
        const oct::ImVec c = oct::cross(oct::ImVec::unit(i), oct::ImVec::unit(j));
        for (int k = 0; k < 7; ++k)
          a.cross_r[i][j][k] = c.v[k].to_complex().real();
      }
    const auto ft = oct::f_mult_table();
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j)
        for (int k = 0; k < 7; ++k)
          a.cross_f[i][j][k] = ft[i][j][k].to_complex();
    return a;
  }();
  return t;
}

V7 cross_r(const V7& u, const V7& v) {
  const auto& t = tables().cross_r;
  V7 out = V7::Zero();
  for (int i = 0; i < 7; ++i) {
    if (u(i) == Complex(0, 0)) continue;
    for (int j = 0; j < 7; ++j) {
      if (v(j) == Complex(0, 0)) continue;
      for (int k = 0; k < 7; ++k)
        if (t[i][j][k] != 0.0) out(k) += t[i][j][k] * u(i) * v(j);
    }
  }
  return out;
}

V7 cross_f(const V7& u, const V7& v) {
  const auto& t = tables().cross_f;
  V7 out = V7::Zero();
  for (int i = 0; i < 7; ++i) {
    if (u(i) == Complex(0, 0)) continue;
    for (int j = 0; j < 7; ++j) {
      if (v(j) == Complex(0, 0)) continue;
      for (int k = 0; k < 7; ++k)
        if (t[i][j][k] != Complex(0, 0)) out(k) += t[i][j][k] * u(i) * v(j);
    }
  }
  return out;
}

// Complex-bilinear q in r-coordinates.
Complex qdot(const V7& u, const V7& v) {
  Complex acc(0, 0);
  for (int k = 0; k < 7; ++k) acc += tables().qr[k] * u(k) * v(k);
  return acc;
}

// q-orthogonal projection of v away from span(basis).
V7 project_out(const V7& v, const std::vector<V7>& basis) {
  const int n = static_cast<int>(basis.size());
  Eigen::MatrixXcd gram(n, n);
  Eigen::VectorXcd rhs(n);
  for (int a = 0; a < n; ++a) {
    rhs(a) = qdot(v, basis[a]);
    for (int b = 0; b < n; ++b) gram(a, b) = qdot(basis[a], basis[b]);
  }
  const Eigen::VectorXcd coef = gram.fullPivLu().solve(rhs);
  V7 out = v;
  for (int a = 0; a < n; ++a) out -= coef(a) * basis[a];
  return out;
}

double sup_norm(const M7& m) { return m.cwiseAbs().maxCoeff(); }

// Second-order one-sided / central first derivative along one index.
template <typename F>
double deriv(F&& value, int k, int n, double h) {
  if (k == 0) return (-3.0 * value(0) + 4.0 * value(1) - value(2)) / (2.0 * h);
  if (k == n - 1)
    return (3.0 * value(n - 1) - 4.0 * value(n - 2) + value(n - 3)) / (2.0 * h);
  return (value(k + 1) - value(k - 1)) / (2.0 * h);
}

// Cayley transport over one edge: solution step of ds/dt = -A s.
M7 cayley_step(const M7& a_mid, double h) {
  const M7 half = 0.5 * h * a_mid;
  return (M7::Identity() + half).fullPivLu().solve(M7::Identity() - half);
}

// RK4 step for dK/dt = K A(t) with A linear between a0 and a1 over length h.
M7 rk4_step(const M7& k0, const M7& a0, const M7& a1, double h) {
  const M7 am = 0.5 * (a0 + a1);
  const M7 k1 = k0 * a0;
  const M7 k2 = (k0 + 0.5 * h * k1) * am;
  const M7 k3 = (k0 + 0.5 * h * k2) * am;
  const M7 k4 = (k0 + h * k3) * a1;
  return k0 + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

FlatConnection assemble_flat_connection(const hitchin::SolverProblem& p,
                                        const hitchin::MetricGrid& g,
                                        double residual_tol) {
  const auto res = hitchin::assemble_residual(p, g);
  if (res.scalar_sup > residual_tol) {
    std::ostringstream os;
    os << "metric does not solve the harmonic equation: residual "
       << res.scalar_sup << " > " << residual_tol
       << "; the assembled connection would not be flat";
    throw std::runtime_error(os.str());
  }
  FlatConnection conn;
  conn.nx = g.nx;
  conn.ny = g.ny;
  conn.x0 = g.x0;
  conn.y0 = g.y0;
  conn.hx = g.hx;
  conn.hy = g.hy;
  conn.metric_residual = res.scalar_sup;
  conn.ax.resize(static_cast<size_t>(g.nx) * g.ny);
  conn.ay.resize(conn.ax.size());

  const Complex iu(0.0, 1.0);
  std::vector<M7> ax_e(conn.ax.size()), ay_e(conn.ax.size());
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const auto w = g.log_weights(i, j);
      std::array<double, 7> wx, wy;
      for (int a = 0; a < 7; ++a) {
        wx[a] = deriv([&](int k) { return g.log_weights(k, j)[a]; }, i, g.nx,
                      g.hx);
        wy[a] = deriv([&](int k) { return g.log_weights(i, k)[a]; }, j, g.ny,
                      g.hy);
      }
      const Complex z(g.x(i), g.y(j));
      const Mat7 m = hitchin::phi_matrix(p.b_at(z), p.dd_at(z));
      M7 phi = M7::Zero();
      for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b)
          if (m[a][b] != Complex(0, 0))
            phi(a, b) = m[a][b] * std::exp(0.5 * (w[a] - w[b]));
      const M7 phis = phi.adjoint();
      M7 ax = phi + phis;
      M7 ay = iu * (phi - phis);
      for (int a = 0; a < 7; ++a) {
        ax(a, a) += -0.5 * iu * wy[a];
        ay(a, a) += 0.5 * iu * wx[a];
      }
      const size_t k = static_cast<size_t>(j) * g.nx + i;
      ax_e[k] = ax;
      ay_e[k] = ay;
      conn.ax[k] = from_eigen(ax);
      conn.ay[k] = from_eigen(ay);

      // Reality: conjugating by the antidiagonal flip and complex conjugation
      // must fix the connection (it is valued in the split real form).
      M7 rx, ry;
      for (int a = 0; a < 7; ++a)
        for (int b = 0; b < 7; ++b) {
          rx(a, b) = std::conj(ax(6 - a, 6 - b)) - ax(a, b);
          ry(a, b) = std::conj(ay(6 - a, 6 - b)) - ay(a, b);
        }
      conn.reality_defect =
          std::max({conn.reality_defect, sup_norm(rx), sup_norm(ry)});
    }
  }

  // Plaquette holonomy around each grid cell.
  for (int j = 0; j + 1 < g.ny; ++j) {
    for (int i = 0; i + 1 < g.nx; ++i) {
      auto at = [&](int ii, int jj, bool ydir) -> const M7& {
        return ydir ? ay_e[static_cast<size_t>(jj) * g.nx + ii]
                    : ax_e[static_cast<size_t>(jj) * g.nx + ii];
      };
      const M7 bottom =
          cayley_step(0.5 * (at(i, j, false) + at(i + 1, j, false)), g.hx);
      const M7 right =
          cayley_step(0.5 * (at(i + 1, j, true) + at(i + 1, j + 1, true)), g.hy);
      const M7 top = cayley_step(
          0.5 * (at(i, j + 1, false) + at(i + 1, j + 1, false)), g.hx);
      const M7 left =
          cayley_step(0.5 * (at(i, j, true) + at(i, j + 1, true)), g.hy);
      const M7 hol = left.fullPivLu().solve(top.fullPivLu().solve(M7::Identity())) *
                     right * bottom;
      conn.plaquette_defect =
          std::max(conn.plaquette_defect, sup_norm(hol - M7::Identity()));
    }
  }
  return conn;
}

CurveGrid reconstruct_curve(const FlatConnection& conn,
                            const std::array<std::array<double, 7>, 7>*
                                basepoint_frame) {
  const int nx = conn.nx, ny = conn.ny;
  CurveGrid curve;
  curve.nx = nx;
  curve.ny = ny;
  curve.x0 = conn.x0;
  curve.y0 = conn.y0;
  curve.hx = conn.hx;
  curve.hy = conn.hy;
  curve.f.resize(static_cast<size_t>(nx) * ny);
  curve.qf.resize(curve.f.size());

  // Flat-coordinate frame K with dK = K A, K(southwest) = Id: row j = 0
  // first, then up each column.
  std::vector<M7> frame(curve.f.size());
  auto A = [&](int i, int j, bool ydir) {
    return to_eigen(ydir ? conn.Ay(i, j) : conn.Ax(i, j));
  };
  frame[0] = M7::Identity();
  for (int i = 0; i + 1 < nx; ++i)
    frame[i + 1] = rk4_step(frame[i], A(i, 0, false), A(i + 1, 0, false),
                            conn.hx);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j + 1 < ny; ++j) {
      const size_t k = static_cast<size_t>(j) * nx + i;
      frame[k + nx] = rk4_step(frame[k], A(i, j, true), A(i, j + 1, true),
                               conn.hy);
    }

  // Two-path disagreement at the opposite corner.
  {
    M7 alt = M7::Identity();
    for (int j = 0; j + 1 < ny; ++j)
      alt = rk4_step(alt, A(0, j, true), A(0, j + 1, true), conn.hy);
    for (int i = 0; i + 1 < nx; ++i)
      alt = rk4_step(alt, A(i, ny - 1, false), A(i + 1, ny - 1, false),
                     conn.hx);
    curve.path_dependence =
        sup_norm(alt - frame[static_cast<size_t>(ny - 1) * nx + nx - 1]);
  }

  const auto& tab = tables();
  const M7 n_flip = flip_matrix();
  M7 rot = M7::Identity();
  if (basepoint_frame) {
    for (int a = 0; a < 7; ++a)
      for (int b = 0; b < 7; ++b) rot(a, b) = (*basepoint_frame)[a][b];
  }

  const int stride = std::max(1, nx / 16);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const size_t k = static_cast<size_t>(j) * nx + i;
      const M7& K = frame[k];
      const V7 f_flat = K.col(3);  // middle slot section
      // Real projection under v -> N conj(v).
      const V7 conj_part = n_flip * f_flat.conjugate();
      curve.imag_residue = std::max(
          curve.imag_residue, (f_flat - conj_part).cwiseAbs().maxCoeff() / 2);
      const V7 f_real_f = 0.5 * (f_flat + conj_part);
      V7 r = tab.p * f_real_f;
      curve.imag_residue =
          std::max(curve.imag_residue, r.imag().cwiseAbs().maxCoeff());
      r = rot * r.real().cast<Complex>();
      for (int a = 0; a < 7; ++a) curve.f[k][a] = r(a).real();
      const double q = qdot(r, r).real();
      curve.qf[k] = q;
      curve.worst_qf = std::max(curve.worst_qf, std::abs(q + 1.0));

      // Structure transport defects on a subgrid.
      if (i % stride == 0 && j % stride == 0) {
        curve.q_parallel_defect = std::max(
            curve.q_parallel_defect,
            sup_norm(K.transpose() * tab.qf * K - tab.qf));
        const M7 G = K.fullPivLu().solve(M7::Identity());
        for (int a = 0; a < 7; ++a)
          for (int b = a + 1; b < 7; ++b) {
            const V7 prod = cross_f(G.col(a), G.col(b));
            const V7 expect = cross_f(V7::Unit(a), V7::Unit(b));
            curve.cross_parallel_defect =
                std::max(curve.cross_parallel_defect,
                         (K * prod - expect).cwiseAbs().maxCoeff());
          }
      }
    }
  }
  return curve;
}

CurveChecks curve_checks(const CurveGrid& curve, const FlatConnection& conn,
                         const hitchin::SolverProblem& p, int interior_margin) {
  CurveChecks out;
  out.cert.title = "reconstructed curve geometry";
  const int nx = curve.nx, ny = curve.ny;
  const double hx = curve.hx, hy = curve.hy;
  const int m1 = std::max(1, interior_margin);
  const int m2 = std::max(2, interior_margin);
  auto fv = [&](int i, int j) {
    V7 v;
    const auto& a = curve.at(i, j);
    for (int k = 0; k < 7; ++k) v(k) = a[k];
    return v;
  };

  const double eps0 = std::max(10.0 * conn.plaquette_defect, 1e-10);
  // |b| over the grid: the second form is expected to have full rank where
  // b is bounded away from zero and to degenerate at its zeros.
  double bmax = 0;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      bmax = std::max(bmax,
                      std::abs(p.b_at(Complex(curve.x(i), curve.y(j)))));
  int rank_mismatches = 0;
  // Fields needed for the third-form checks.
  std::vector<V7> w_field(static_cast<size_t>(nx) * ny, V7::Zero());
  std::vector<V7> b12_field(w_field.size(), V7::Zero());
  std::vector<char> valid(w_field.size(), 0);

  double slice = 0;
  for (int j = m1; j + m1 < ny; ++j)
    for (int i = m1; i + m1 < nx; ++i) {
      const V7 f = fv(i, j);
      for (int a = 3; a < 7; ++a) slice = std::max(slice, std::abs(f(a).real()));
      const V7 fx = (fv(i + 1, j) - fv(i - 1, j)) / (2 * hx);
      const V7 fy = (fv(i, j + 1) - fv(i, j - 1)) / (2 * hy);
      const V7 fxx = (fv(i + 1, j) - 2 * f + fv(i - 1, j)) / (hx * hx);
      const V7 fyy = (fv(i, j + 1) - 2 * f + fv(i, j - 1)) / (hy * hy);
      const V7 fxy = (fv(i + 1, j + 1) - fv(i + 1, j - 1) - fv(i - 1, j + 1) +
                      fv(i - 1, j - 1)) /
                     (4 * hx * hy);

      const double rho = qdot(fx, fx).real();
      const double scale = std::max(rho, 1e-12);
      // Conformality and J-tangency (f_y = f x f_x).
      out.conformal_defect = std::max(
          out.conformal_defect,
          std::max(std::abs(qdot(fy, fy).real() - rho),
                   std::abs(qdot(fx, fy).real())) /
              scale);
      const V7 jfx = cross_r(f, fx);
      out.tangency_defect =
          std::max(out.tangency_defect,
                   (fy - jfx).cwiseAbs().maxCoeff() / std::sqrt(scale));

      // Second fundamental form: project the second derivatives away from
      // the position and the tangent plane.
      const std::vector<V7> low{f, fx, fy};
      const V7 b11 = project_out(fxx, low);
      const V7 b22 = project_out(fyy, low);
      const V7 b12 = project_out(fxy, low);
      out.mean_curvature_defect =
          std::max(out.mean_curvature_defect,
                   (b11 + b22).cwiseAbs().maxCoeff() / scale);

      // Image of II: trace-free part spans the normal plane.
      const V7 v1 = 0.5 * (b11 - b22);
      const V7 v2 = b12;
      Eigen::Matrix2d gram;
      gram << qdot(v1, v1).real(), qdot(v1, v2).real(), qdot(v1, v2).real(),
          qdot(v2, v2).real();
      const Eigen::Vector2d ev =
          Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(gram).eigenvalues();
      const double ii_size = std::sqrt(v1.cwiseAbs2().sum() + v2.cwiseAbs2().sum());
      if (ev(1) < -eps0 * scale) {
        ++out.rank2_points;
        const size_t k = static_cast<size_t>(j) * nx + i;
        w_field[k] = v1;
        b12_field[k] = b12;
        valid[k] = 1;
        // Complex linearity II(J X, Y) = J(II(X, Y)): with J f_x = f_y this
        // reads II(f_y, f_x) = f x II(f_x, f_x).
        out.ii_complex_linear_defect =
            std::max(out.ii_complex_linear_defect,
                     (b12 - cross_r(f, b11)).cwiseAbs().maxCoeff() /
                         std::max(ii_size, 1e-12));
      } else {
        ++out.degenerate_points;
        if (bmax > 0 &&
            std::abs(p.b_at(Complex(curve.x(i), curve.y(j)))) > 0.3 * bmax)
          ++rank_mismatches;
      }
    }
  out.slice_residue = slice;

  // Third fundamental form checks on the doubly interior region, where the
  // normal field v1 is defined on the whole finite-difference stencil.
  for (int j = m2; j + m2 < ny; ++j)
    for (int i = m2; i + m2 < nx; ++i) {
      const size_t k = static_cast<size_t>(j) * nx + i;
      if (!valid[k] || !valid[k - 1] || !valid[k + 1] || !valid[k - nx] ||
          !valid[k + nx])
        continue;
      const V7 f = fv(i, j);
      const V7 fx = (fv(i + 1, j) - fv(i - 1, j)) / (2 * hx);
      const V7 fy = (fv(i, j + 1) - fv(i, j - 1)) / (2 * hy);
      auto nu_at = [&](size_t kk, int ii, int jj) {
        const V7& w = w_field[kk];
        return V7(w - Complex(0, 1) * cross_r(fv(ii, jj), w));
      };
      const V7 nu = nu_at(k, i, j);
      const V7 nux = (nu_at(k + 1, i + 1, j) - nu_at(k - 1, i - 1, j)) / (2 * hx);
      const V7 nuy =
          (nu_at(k + nx, i, j + 1) - nu_at(k - nx, i, j - 1)) / (2 * hy);
      const V7 dz_nu = 0.5 * (nux - Complex(0, 1) * nuy);
      const V7 xz = 0.5 * (fx - Complex(0, 1) * fy);
      const std::vector<V7> frame_basis{f, fx, fy, w_field[k],
                                        cross_r(f, w_field[k])};
      const V7 third = project_out(dz_nu, frame_basis);
      // The cross product with the (1,0) tangent vector maps the normal
      // i-eigenfield nu into the J-anti-linear half of the second normal
      // space, so the identity constrains only that half of the third form:
      //   (1 + iJ)/2 of III''(f_z, nu) = -(i/2) f_z x nu.
      // The J-linear half of D_z nu is an independent tensor.
      const V7 third_anti =
          0.5 * (third + Complex(0, 1) * cross_r(f, third));
      const V7 predicted = Complex(0, -0.5) * cross_r(xz, nu);
      const double mag =
          std::max(predicted.cwiseAbs().maxCoeff(), 1e-12);
      out.iii_cross_defect =
          std::max(out.iii_cross_defect,
                   (third_anti - predicted).cwiseAbs().maxCoeff() / mag);

      // Metric-compatibility duality (shape operator vs second form):
      // differentiating q(f_y, w) = 0 gives q(II(f_x,f_y), w) = -q(f_y, D_x w).
      const V7 dx_w = (w_field[k + 1] - w_field[k - 1]) / (2 * hx);
      const double lhs = qdot(b12_field[k], w_field[k]).real();
      const double rhs_v = -qdot(fy, dx_w).real();
      const double dual_scale =
          std::max(b12_field[k].cwiseAbs().maxCoeff() *
                       w_field[k].cwiseAbs().maxCoeff(),
                   1e-10);
      out.duality_defect = std::max(out.duality_defect,
                                    std::abs(lhs - rhs_v) / dual_scale);

      // Symmetry of III(., II(., .)): the B-components of d_x II(f_x,f_y)
      // and d_y II(f_x,f_x) agree.
      const V7 dx_b12 = (b12_field[k + 1] - b12_field[k - 1]) / (2 * hx);
      const V7 dy_w = (w_field[k + nx] - w_field[k - nx]) / (2 * hy);
      const V7 s1 = project_out(dx_b12, frame_basis);
      const V7 s2 = project_out(dy_w, frame_basis);
      const double smag = std::max(
          {s1.cwiseAbs().maxCoeff(), s2.cwiseAbs().maxCoeff(), 1e-10});
      out.iii_symmetry_defect = std::max(
          out.iii_symmetry_defect, (s1 - s2).cwiseAbs().maxCoeff() / smag);
    }

  const double h2 = hx * hx + hy * hy;
  const bool b_vanishes = bmax == 0.0;
  out.cert.add("curve lies on the q = -1 quadric",
               curve.worst_qf < std::max(1e-5, 40 * h2));
  out.cert.add("real projection residue small",
               curve.imag_residue < std::max(1e-5, 40 * h2));
  out.cert.add("tangent plane is J-invariant (holomorphicity)",
               out.tangency_defect < std::max(1e-4, 100 * h2));
  out.cert.add("induced metric is conformal",
               out.conformal_defect < std::max(1e-4, 100 * h2));
  out.cert.add("mean curvature vanishes",
               out.mean_curvature_defect < std::max(1e-4, 100 * h2));
  if (!b_vanishes) {
    out.cert.add("second form rank 2 and negative where b is not small",
                 rank_mismatches == 0 && out.rank2_points > 0);
    out.cert.add("second form is complex linear",
                 out.ii_complex_linear_defect < std::max(1e-3, 300 * h2));
    out.cert.add("third-form cross identity",
                 out.iii_cross_defect < std::max(1e-3, 300 * h2));
    out.cert.add("shape/second-form duality",
                 out.duality_defect < std::max(1e-3, 300 * h2));
    out.cert.add("third-of-second symmetry",
                 out.iii_symmetry_defect < std::max(1e-3, 300 * h2));
  } else {
    out.cert.add("b = 0 curve confined to the quaternionic slice",
                 out.slice_residue < 1e-5);
  }
  return out;
}

GeodesicReport geodesic_h32_check(const CurveGrid& curve) {
  GeodesicReport rep;
  const int stride = std::max(1, curve.nx / 24);
  std::vector<Eigen::Matrix<double, 1, 7>> rows;
  for (int j = 0; j < curve.ny; j += stride)
    for (int i = 0; i < curve.nx; i += stride) {
      Eigen::Matrix<double, 1, 7> row;
      const auto& f = curve.at(i, j);
      for (int a = 0; a < 7; ++a) row(a) = tables().qr[a] * f[a];
      rows.push_back(row);
    }
  Eigen::MatrixXd m(static_cast<int>(rows.size()), 7);
  for (int r = 0; r < m.rows(); ++r) m.row(r) = rows[static_cast<size_t>(r)];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinV);
  rep.min_singular = svd.singularValues()(6);
  const Eigen::VectorXd v = svd.matrixV().col(6);
  double q = 0;
  for (int a = 0; a < 7; ++a) {
    rep.axis[a] = v(a);
    q += tables().qr[a] * v(a) * v(a);
  }
  rep.axis_q = q;
  double ortho = 0;
  for (const auto& row : rows) ortho = std::max(ortho, std::abs(row.dot(v)));
  rep.orthogonality = ortho;
  rep.parallel_line_found = rep.min_singular < 1e-4 && q > 0;
  return rep;
}

void export_curve(const CurveGrid& curve, const std::string& path) {
  std::ofstream outf(path);
  if (!outf) throw std::runtime_error("cannot open " + path);
  outf << std::setprecision(17);
  outf << "# reconstructed curve samples\n";
  outf << "# nx=" << curve.nx << " ny=" << curve.ny << " worst_qf="
       << curve.worst_qf << " imag_residue=" << curve.imag_residue << "\n";
  outf << "# columns: x,y,f1,f2,f3,f4,f5,f6,f7,qf\n";
  for (int j = 0; j < curve.ny; ++j)
    for (int i = 0; i < curve.nx; ++i) {
      outf << curve.x(i) << ',' << curve.y(j);
      const auto& f = curve.at(i, j);
      for (int a = 0; a < 7; ++a) outf << ',' << f[a];
      outf << ',' << curve.qf[static_cast<size_t>(j) * curve.nx + i] << "\n";
    }
}

}  // namespace g2oct::frenet
