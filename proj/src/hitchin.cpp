#include "g2oct/hitchin.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace g2oct::hitchin {
namespace {

// Nonlinear terms of the two scalar equations and their partials.
struct LocalTerms {
  double e1, e3;          // E1, E3 such that u_{z zbar} = E
  double d11, d13, d31, d33;
};

LocalTerms local_terms(double u1, double u3, double b2, double dd2) {
  LocalTerms t;
  const double a = std::exp(u1);
  const double p = b2 * std::exp(u3 - 2.0 * u1);
  const double q = dd2 * std::exp(u1 - 2.0 * u3);
  t.e1 = a - p;
  t.e3 = 0.5 * a - q;
  t.d11 = a + 2.0 * p;
  t.d13 = -p;
  t.d31 = 0.5 * a - q;
  t.d33 = 2.0 * q;
  return t;
}

double norm2(Complex v) { return std::norm(v); }

void check_problem(const SolverProblem& p) {
  if (p.nx < 8 || p.ny < 8) throw std::invalid_argument("grid must be >= 8x8");
  if (p.tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (!(p.x1 > p.x0) || !(p.y1 > p.y0))
    throw std::invalid_argument("empty domain");
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

Complex eval_poly(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::string SolverProblem::hash() const {
  std::ostringstream os;
  os << std::setprecision(17) << x0 << ',' << x1 << ',' << y0 << ',' << y1
     << ',' << nx << ',' << ny << ',' << tol << ';';
  for (Complex c : b_coeffs) os << c.real() << ',' << c.imag() << ';';
  os << '|';
  for (Complex c : dd_coeffs) os << c.real() << ',' << c.imag() << ';';
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << fnv1a(os.str());
  return hex.str();
}

MetricGrid MetricGrid::zeros(const SolverProblem& p) {
  MetricGrid g;
  g.nx = p.nx;
  g.ny = p.ny;
  g.x0 = p.x0;
  g.y0 = p.y0;
  g.hx = (p.x1 - p.x0) / (p.nx - 1);
  g.hy = (p.y1 - p.y0) / (p.ny - 1);
  g.u1.assign(static_cast<size_t>(p.nx) * p.ny, 0.0);
  g.u3.assign(static_cast<size_t>(p.nx) * p.ny, 0.0);
  return g;
}

std::array<double, 7> MetricGrid::log_weights(int i, int j) const {
  const double v1 = at1(i, j);
  const double v3 = at3(i, j);
  return {-v3, v1 - v3, -v1, 0.0, v1, v3 - v1, v3};
}

Mat7 phi_matrix(Complex b, Complex dd) {
  Mat7 m{};
  const Complex kappa = slot_constant();
  m[1][0] = kappa;
  m[2][1] = b;
  m[3][2] = Complex(1.0, 0.0);
  m[4][3] = Complex(1.0, 0.0);
  m[5][4] = b;
  m[6][5] = kappa;
  m[0][5] = dd;
  m[1][6] = dd;
  return m;
}

ResidualReport assemble_residual(const SolverProblem& p, const MetricGrid& g) {
  check_problem(p);
  if (g.nx != p.nx || g.ny != p.ny)
    throw std::invalid_argument("grid does not match problem dimensions");
  ResidualReport rep;
  rep.r1.assign(g.u1.size(), 0.0);
  rep.r3.assign(g.u3.size(), 0.0);
  const double cx = 1.0 / (4.0 * g.hx * g.hx);
  const double cy = 1.0 / (4.0 * g.hy * g.hy);
  for (int j = 1; j + 1 < g.ny; ++j) {
    for (int i = 1; i + 1 < g.nx; ++i) {
      const Complex z(g.x(i), g.y(j));
      const double b2 = norm2(p.b_at(z));
      const double dd2 = norm2(p.dd_at(z));
      const double u1c = g.at1(i, j);
      const double u3c = g.at3(i, j);
      if (!std::isfinite(std::exp(u1c)) || !std::isfinite(std::exp(u3c))) {
        std::ostringstream os;
        os << "metric weight overflow at grid point (" << i << "," << j << ")";
        throw std::runtime_error(os.str());
      }
      const LocalTerms t = local_terms(u1c, u3c, b2, dd2);
      const double lap1 = cx * (g.at1(i + 1, j) + g.at1(i - 1, j) - 2 * u1c) +
                          cy * (g.at1(i, j + 1) + g.at1(i, j - 1) - 2 * u1c);
      const double lap3 = cx * (g.at3(i + 1, j) + g.at3(i - 1, j) - 2 * u3c) +
                          cy * (g.at3(i, j + 1) + g.at3(i, j - 1) - 2 * u3c);
      double r1 = lap1 - t.e1;
      double r3 = lap3 - t.e3;
      if (p.source1) r1 -= p.source1(g.x(i), g.y(j));
      if (p.source3) r3 -= p.source3(g.x(i), g.y(j));
      rep.r1[static_cast<size_t>(j) * g.nx + i] = r1;
      rep.r3[static_cast<size_t>(j) * g.nx + i] = r3;
      rep.sup1 = std::max(rep.sup1, std::abs(r1));
      rep.sup3 = std::max(rep.sup3, std::abs(r3));
    }
  }
  rep.scalar_sup = std::max(rep.sup1, rep.sup3);

  // Full 7x7 cross-check: diag(w_{z zbar}) - [Phi, Phi*_h], assembled without
  // the scalar reduction.  Only meaningful without manufactured sources.
  if (!p.source1 && !p.source3) {
    for (int j = 1; j + 1 < g.ny; ++j) {
      for (int i = 1; i + 1 < g.nx; ++i) {
        const Complex z(g.x(i), g.y(j));
        const Mat7 m = phi_matrix(p.b_at(z), p.dd_at(z));
        const auto w = g.log_weights(i, j);
        std::array<double, 7> h;
        for (int a = 0; a < 7; ++a) h[a] = std::exp(w[a]);
        // Phi* = H^-1 conj(M)^T H.
        Mat7 ms{};
        for (int a = 0; a < 7; ++a)
          for (int c = 0; c < 7; ++c)
            ms[a][c] = std::conj(m[c][a]) * h[c] / h[a];
        Mat7 comm{};
        for (int a = 0; a < 7; ++a)
          for (int c = 0; c < 7; ++c) {
            Complex acc(0, 0);
            for (int k = 0; k < 7; ++k)
              acc += m[a][k] * ms[k][c] - ms[a][k] * m[k][c];
            comm[a][c] = acc;
          }
        const auto wE = g.log_weights(i + 1, j);
        const auto wW = g.log_weights(i - 1, j);
        const auto wN = g.log_weights(i, j + 1);
        const auto wS = g.log_weights(i, j - 1);
        for (int a = 0; a < 7; ++a)
          for (int c = 0; c < 7; ++c) {
            Complex r = -comm[a][c];
            if (a == c) {
              r += cx * (wE[a] + wW[a] - 2 * w[a]) +
                   cy * (wN[a] + wS[a] - 2 * w[a]);
            }
            rep.matrix_sup = std::max(rep.matrix_sup, std::abs(r));
          }
      }
    }
  }
  return rep;
}

bool constant_balance(Complex b, Complex dd, double* u1, double* u3) {
  const double b2 = norm2(b);
  const double dd2 = norm2(dd);
  if (b2 <= 0.0 || dd2 <= 0.0) return false;
  const double v3 = 0.5 * std::log(2.0 * dd2);
  const double v1 = (std::log(b2) + v3) / 3.0;
  if (u1) *u1 = v1;
  if (u3) *u3 = v3;
  return true;
}

double disk_log_metric(double x, double y) {
  const double r2 = x * x + y * y;
  if (r2 >= 1.0) throw std::domain_error("disk metric needs |z| < 1");
  return std::log(2.0) - 2.0 * std::log1p(-r2);
}

MetricGrid newton_solve(const SolverProblem& p, SolveReport* report,
                        const MetricGrid* initial) {
  check_problem(p);
  MetricGrid g = initial ? *initial : MetricGrid::zeros(p);
  if (initial && (g.nx != p.nx || g.ny != p.ny))
    throw std::invalid_argument("initial grid does not match problem");

  // Default initialization: constant balance at the domain center when the
  // coefficients allow it, otherwise zero.
  if (!initial) {
    const Complex zc(0.5 * (p.x0 + p.x1), 0.5 * (p.y0 + p.y1));
    double c1 = 0.0, c3 = 0.0;
    constant_balance(p.b_at(zc), p.dd_at(zc), &c1, &c3);
    std::fill(g.u1.begin(), g.u1.end(), c1);
    std::fill(g.u3.begin(), g.u3.end(), c3);
  }

  // Dirichlet boundary.
  auto bdry1 = p.u1_boundary;
  auto bdry3 = p.u3_boundary;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      if (j != 0 && j != g.ny - 1 && i != 0 && i != g.nx - 1) continue;
      if (bdry1) g.at1(i, j) = bdry1(g.x(i), g.y(j));
      if (bdry3) g.at3(i, j) = bdry3(g.x(i), g.y(j));
    }

  const int ni = g.nx - 2, nj = g.ny - 2;
  const int n = 2 * ni * nj;
  auto idx1 = [&](int i, int j) { return 2 * ((j - 1) * ni + (i - 1)); };
  const double cx = 1.0 / (4.0 * g.hx * g.hx);
  const double cy = 1.0 / (4.0 * g.hy * g.hy);

  SolveReport rep;
  ResidualReport res = assemble_residual(p, g);
  double res_norm = res.scalar_sup;
  rep.history.push_back(res_norm);

  Eigen::SparseMatrix<double> jac(n, n);
  Eigen::VectorXd rhs(n), step(n);
  std::vector<Eigen::Triplet<double>> trip;

  int it = 0;
  for (; it < p.max_iter && res_norm > p.tol; ++it) {
    trip.clear();
    for (int j = 1; j + 1 < g.ny; ++j) {
      for (int i = 1; i + 1 < g.nx; ++i) {
        const Complex z(g.x(i), g.y(j));
        const LocalTerms t = local_terms(g.at1(i, j), g.at3(i, j),
                                         norm2(p.b_at(z)), norm2(p.dd_at(z)));
        const int r = idx1(i, j);
        const double diag = -2.0 * (cx + cy);
        trip.emplace_back(r, r, diag - t.d11);
        trip.emplace_back(r, r + 1, -t.d13);
        trip.emplace_back(r + 1, r, -t.d31);
        trip.emplace_back(r + 1, r + 1, diag - t.d33);
        const int di[4] = {1, -1, 0, 0};
        const int dj[4] = {0, 0, 1, -1};
        const double cc[4] = {cx, cx, cy, cy};
        for (int k = 0; k < 4; ++k) {
          const int ii = i + di[k], jj = j + dj[k];
          if (ii == 0 || ii == g.nx - 1 || jj == 0 || jj == g.ny - 1) continue;
          const int c = idx1(ii, jj);
          trip.emplace_back(r, c, cc[k]);
          trip.emplace_back(r + 1, c + 1, cc[k]);
        }
        rhs[r] = -res.r1[static_cast<size_t>(j) * g.nx + i];
        rhs[r + 1] = -res.r3[static_cast<size_t>(j) * g.nx + i];
      }
    }
    jac.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(jac);
    if (lu.info() != Eigen::Success) {
      rep.note = "Jacobian factorization failed (singular linearization)";
      break;
    }
    step = lu.solve(rhs);

    // Damped update: halve the step until the residual decreases.
    double scale = 1.0;
    MetricGrid trial = g;
    ResidualReport trial_res;
    double trial_norm = 0;
    bool accepted = false;
    for (int half = 0; half < 12; ++half) {
      trial = g;
      for (int j = 1; j + 1 < g.ny; ++j)
        for (int i = 1; i + 1 < g.nx; ++i) {
          trial.at1(i, j) += scale * step[idx1(i, j)];
          trial.at3(i, j) += scale * step[idx1(i, j) + 1];
        }
      trial_res = assemble_residual(p, trial);
      trial_norm = trial_res.scalar_sup;
      if (trial_norm < res_norm || trial_norm <= p.tol) {
        accepted = true;
        break;
      }
      scale *= 0.5;
    }
    if (!accepted) {
      rep.note = "line search stalled";
      break;
    }
    g = trial;
    res = trial_res;
    res_norm = trial_norm;
    rep.history.push_back(res_norm);
  }

  rep.iterations = it;
  rep.final_residual = res_norm;
  rep.matrix_residual = res.matrix_sup;
  rep.converged = res_norm <= p.tol;
  if (report) *report = rep;
  return g;
}

void export_metric(const SolverProblem& p, const MetricGrid& g,
                   const SolveReport& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << std::setprecision(17);
  out << "# metric grid for the cyclic harmonic equation\n";
  out << "# problem=" << p.hash() << " nx=" << g.nx << " ny=" << g.ny
      << " x0=" << g.x0 << " y0=" << g.y0 << " hx=" << g.hx << " hy=" << g.hy
      << "\n";
  out << "# tol=" << p.tol << " converged=" << (r.converged ? "true" : "false")
      << " residual=" << r.final_residual
      << " matrix_residual=" << r.matrix_residual << "\n";
  out << "# columns: x,y,u1,u3,residual\n";
  const ResidualReport res = assemble_residual(p, g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i)
      out << g.x(i) << ',' << g.y(j) << ',' << g.at1(i, j) << ','
          << g.at3(i, j) << ',' << res.r1[static_cast<size_t>(j) * g.nx + i]
          << "\n";
}

MetricGrid import_metric(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  MetricGrid g;
  std::string line;
  std::vector<std::array<double, 4>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream is(line);
      std::string tok;
      while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        if (key == "nx") g.nx = std::stoi(val);
        if (key == "ny") g.ny = std::stoi(val);
        if (key == "x0") g.x0 = std::stod(val);
        if (key == "y0") g.y0 = std::stod(val);
        if (key == "hx") g.hx = std::stod(val);
        if (key == "hy") g.hy = std::stod(val);
      }
      continue;
    }
    std::array<double, 4> row{};
    std::istringstream is(line);
    std::string field;
    for (int k = 0; k < 5 && std::getline(is, field, ','); ++k)
      if (k < 4) row[k] = std::stod(field);
    rows.push_back(row);
  }
  if (g.nx <= 0 || g.ny <= 0 ||
      rows.size() != static_cast<size_t>(g.nx) * g.ny)
    throw std::runtime_error("malformed metric file " + path);
  g.u1.resize(rows.size());
  g.u3.resize(rows.size());
  for (size_t k = 0; k < rows.size(); ++k) {
    g.u1[k] = rows[k][2];
    g.u3[k] = rows[k][3];
  }
  return g;
}

}  // namespace g2oct::hitchin
