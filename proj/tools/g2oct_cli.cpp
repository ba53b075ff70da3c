// Command-line front end: certificate subcommands for the exact layers,
// verdict tables for the stability/moduli arithmetic, and the solve /
// reconstruct / pipeline drivers for the numerical layer.  Every run writes
// summary.json into the output directory; the exit status is 0 iff every
// check in the summary passed.

#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "g2oct/certify.hpp"
#include "g2oct/config.hpp"
#include "g2oct/frenet.hpp"
#include "g2oct/higgs.hpp"
#include "g2oct/hitchin.hpp"
#include "g2oct/lie.hpp"
#include "g2oct/octonion.hpp"

using json = nlohmann::ordered_json;
using g2oct::certify::Certificate;
using g2oct::config::Config;
using Complex = std::complex<double>;

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir = ".";
  long seed = 0;
  double tol = -1.0;  // <0: no override
  bool serial = false;
};

void add_common(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--config", o->config_path, "configuration file (key = value)");
  cmd->add_option("--out", o->out_dir, "output directory");
  cmd->add_option("--seed", o->seed, "seed for randomized sweeps");
  cmd->add_option("--tol", o->tol, "tolerance override");
  cmd->add_flag("--serial", o->serial, "force serial execution");
}

Config load_config(const CommonOpts& o) {
  if (o.config_path.empty()) return Config::from_string("");
  return Config::from_file(o.config_path);
}

void print_certificate(const Certificate& cert) {
  std::printf("== %s ==\n", cert.title.c_str());
  for (const auto& c : cert.checks)
    std::printf("  [%s] %s%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.empty() ? "" : " -- ", c.detail.c_str());
  std::printf("  %zu checks, %d failures\n", cert.checks.size(),
              cert.failures());
}

json cert_to_json(const Certificate& cert) {
  json checks = json::array();
  for (const auto& c : cert.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"title", cert.title},
          {"checks", checks},
          {"all_pass", cert.all_pass()}};
}

// Writes summary.json and returns the process exit status.
int finish(const CommonOpts& o, const std::string& subcommand,
           const std::vector<Certificate>& certs,
           const std::vector<std::string>& artifacts) {
  std::filesystem::create_directories(o.out_dir);
  bool all = true;
  json jcerts = json::array();
  for (const auto& c : certs) {
    all = all && c.all_pass();
    jcerts.push_back(cert_to_json(c));
  }
  // Artifact names are relative to the output directory so identical runs
  // give byte-identical summaries wherever they are written.
  json summary = {{"subcommand", subcommand},
                  {"seed", o.seed},
                  {"serial", o.serial},
                  {"tolerance_override", o.tol < 0 ? json(nullptr) : json(o.tol)},
                  {"certificates", jcerts},
                  {"artifacts", artifacts},
                  {"all_pass", all}};
  const std::string path =
      (std::filesystem::path(o.out_dir) / "summary.json").string();
  std::ofstream out(path);
  out << summary.dump(2) << "\n";
  std::printf("%s: %s (summary: %s)\n", subcommand.c_str(),
              all ? "all checks passed" : "CHECKS FAILED", path.c_str());
  return all ? 0 : 1;
}

g2oct::hitchin::SolverProblem problem_from_config(const Config& cfg,
                                                  const CommonOpts& o) {
  g2oct::hitchin::SolverProblem p;
  p.nx = static_cast<int>(cfg.get_int("solve.nx", 65));
  p.ny = static_cast<int>(cfg.get_int("solve.ny", p.nx));
  p.x0 = cfg.get_double("solve.x0", -0.5);
  p.x1 = cfg.get_double("solve.x1", 0.5);
  p.y0 = cfg.get_double("solve.y0", -0.5);
  p.y1 = cfg.get_double("solve.y1", 0.5);
  if (cfg.has("solve.b")) p.b_coeffs = cfg.get_complex_list("solve.b");
  if (cfg.has("solve.dd")) p.dd_coeffs = cfg.get_complex_list("solve.dd");
  p.tol = cfg.get_double("solve.tol", 1e-10);
  if (o.tol > 0) p.tol = o.tol;
  p.max_iter = static_cast<int>(cfg.get_int("solve.max_iter", 50));

  // Dirichlet data: explicit constants win; otherwise the constant balance of
  // the leading coefficients (which must then be nonzero).
  double c1 = 0, c3 = 0;
  const bool balanced = g2oct::hitchin::constant_balance(
      p.b_coeffs.empty() ? Complex(0) : p.b_coeffs[0],
      p.dd_coeffs.empty() ? Complex(0) : p.dd_coeffs[0], &c1, &c3);
  if (cfg.has("solve.u1_const") || cfg.has("solve.u3_const")) {
    c1 = cfg.get_double("solve.u1_const");
    c3 = cfg.get_double("solve.u3_const");
  } else if (!balanced) {
    throw g2oct::config::ConfigError(
        "solve.u1_const / solve.u3_const required: leading coefficients admit "
        "no constant balance");
  }
  p.u1_boundary = [c1](double, double) { return c1; };
  p.u3_boundary = [c3](double, double) { return c3; };
  return p;
}

Certificate solve_and_report(const g2oct::hitchin::SolverProblem& p,
                             const CommonOpts& o,
                             g2oct::hitchin::MetricGrid* grid_out,
                             std::vector<std::string>* artifacts) {
  g2oct::hitchin::SolveReport rep;
  *grid_out = g2oct::hitchin::newton_solve(p, &rep);
  Certificate cert;
  cert.title = "harmonic metric solve";
  cert.add("newton iteration converged", rep.converged,
           "final residual " + std::to_string(rep.final_residual) + " after " +
               std::to_string(rep.iterations) + " iterations");
  cert.add("matrix residual within 10x scalar tolerance",
           rep.matrix_residual <= 10.0 * p.tol,
           "matrix " + std::to_string(rep.matrix_residual));
  const std::string path =
      (std::filesystem::path(o.out_dir) / "metric.csv").string();
  std::filesystem::create_directories(o.out_dir);
  g2oct::hitchin::export_metric(p, *grid_out, rep, path);
  artifacts->push_back("metric.csv");
  return cert;
}

Certificate reconstruct_and_report(const g2oct::hitchin::SolverProblem& p,
                                   const g2oct::hitchin::MetricGrid& g,
                                   const Config& cfg, const CommonOpts& o,
                                   std::vector<std::string>* artifacts) {
  const auto conn = g2oct::frenet::assemble_flat_connection(p, g);
  const auto curve = g2oct::frenet::reconstruct_curve(conn);
  const int margin =
      static_cast<int>(cfg.get_int("reconstruct.interior_margin", 1));
  auto checks = g2oct::frenet::curve_checks(curve, conn, p, margin);
  const auto geo = g2oct::frenet::geodesic_h32_check(curve);
  checks.cert.add(
      "parallel-axis search completed", true,
      geo.parallel_line_found
          ? "axis found: curve lies in a totally geodesic H^{3,2}"
          : "no parallel axis (curve is full)");
  const std::string path =
      (std::filesystem::path(o.out_dir) / "curve.csv").string();
  std::filesystem::create_directories(o.out_dir);
  g2oct::frenet::export_curve(curve, path);
  artifacts->push_back("curve.csv");
  return checks.cert;
}

int run_stability(const CommonOpts& o, int genus, int d, bool all_d,
                  bool beta_zero, bool delta_zero) {
  std::filesystem::create_directories(o.out_dir);
  const std::string path =
      (std::filesystem::path(o.out_dir) / "stability.csv").string();
  std::ofstream csv(path);
  csv << "genus,d,beta_nonzero,delta_nonzero,verdict,witness,totally_geodesic\n";
  const int lo = all_d ? -1 : d;
  const int hi = all_d ? 6 * genus - 5 : d;
  for (int dd = lo; dd <= hi; ++dd) {
    g2oct::higgs::HiggsDatum datum{genus, dd, !beta_zero, !delta_zero};
    const auto res = g2oct::higgs::classify(datum);
    csv << genus << ',' << dd << ',' << (!beta_zero) << ',' << (!delta_zero)
        << ',' << g2oct::higgs::verdict_name(res.verdict) << ",\""
        << res.witness << "\"," << res.totally_geodesic << "\n";
  }
  csv.close();
  std::printf("wrote %s\n", path.c_str());
  Certificate cert = g2oct::higgs::stability_certificate();
  print_certificate(cert);
  return finish(o, "stability", {cert}, {"stability.csv"});
}

int run_moduli(const CommonOpts& o, int genus) {
  std::filesystem::create_directories(o.out_dir);
  const std::string path =
      (std::filesystem::path(o.out_dir) / "moduli.csv").string();
  std::ofstream csv(path);
  csv << "genus,d,total_dim,fiber_dim,sym_degree,cover_order,bundle_rank,"
         "cone_dim,components,regime\n";
  Certificate cert;
  cert.title = "moduli dimension arithmetic";
  const int g_lo = genus > 0 ? genus : 2;
  const int g_hi = genus > 0 ? genus : 10;
  for (int g = g_lo; g <= g_hi; ++g) {
    bool dims_ok = true, comps_ok = true;
    for (int dd = 0; dd <= 6 * g - 6; ++dd) {
      const auto m = g2oct::higgs::moduli_description(g, dd);
      csv << g << ',' << dd << ',' << m.total_dim << ',' << m.fiber_dim << ','
          << m.sym_degree << ',' << m.cover_order << ',' << m.bundle_rank << ','
          << m.cone_dim << ',' << m.components << ','
          << (m.high_regime ? "high" : "low") << "\n";
      dims_ok = dims_ok && !m.empty && m.total_dim == dd + 8L * g - 8 &&
                m.total_dim == 3L * g - 3 + m.fiber_dim;
      comps_ok = comps_ok && (dd == 0 ? m.components == (1L << (2 * g))
                                      : m.components == 1);
    }
    cert.add("genus " + std::to_string(g) + " dimension identities", dims_ok);
    cert.add("genus " + std::to_string(g) + " component counts", comps_ok);
    const auto locus = g2oct::higgs::hitchin_locus_check(g);
    cert.add("genus " + std::to_string(g) + " top-degree locus",
             locus.consistent,
             "parameter dim " + std::to_string(locus.parameter_dim));
  }
  csv.close();
  std::printf("wrote %s\n", path.c_str());
  print_certificate(cert);
  return finish(o, "moduli", {cert}, {"moduli.csv"});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"split-octonion G2' toolkit: exact algebra certificates, "
               "cyclic Higgs bundle stability, harmonic-metric solver, and "
               "curve reconstruction"};
  app.require_subcommand(1);

  CommonOpts o;
  int genus = 2, d = 0;
  bool all_d = false, beta_zero = false, delta_zero = false;
  bool moduli_all = false;

  auto* c_alg = app.add_subcommand("algebra-check",
                                   "exact split-octonion algebra certificate");
  add_common(c_alg, &o);
  auto* c_lie =
      app.add_subcommand("lie-check", "exact G2' Lie-theory certificate");
  add_common(c_lie, &o);
  auto* c_stab = app.add_subcommand(
      "stability", "stability verdicts for the cyclic rank-7 family");
  add_common(c_stab, &o);
  c_stab->add_option("--genus", genus, "surface genus (>= 2)");
  c_stab->add_option("--d", d, "degree of the line bundle B");
  c_stab->add_flag("--all-d", all_d,
                   "emit every degree from -1 to 6g-5 (includes the two "
                   "invalid rows)");
  c_stab->add_flag("--beta-zero", beta_zero, "set the section beta to zero");
  c_stab->add_flag("--delta-zero", delta_zero, "set the section delta to zero");
  auto* c_mod =
      app.add_subcommand("moduli", "moduli dimension and component arithmetic");
  add_common(c_mod, &o);
  c_mod->add_option("--genus", genus, "single genus (default: sweep 2..10)");
  c_mod->add_flag("--all", moduli_all, "sweep genus 2..10 (default)");
  auto* c_solve =
      app.add_subcommand("solve", "solve the harmonic-metric equations");
  add_common(c_solve, &o);
  auto* c_rec = app.add_subcommand(
      "reconstruct", "rebuild the curve from a solved metric CSV");
  add_common(c_rec, &o);
  std::string metric_path;
  c_rec->add_option("--metric", metric_path, "metric CSV from a solve run");
  auto* c_pipe = app.add_subcommand(
      "pipeline", "solve, reconstruct, and verify the curve end to end");
  add_common(c_pipe, &o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_alg->parsed()) {
      const Certificate cert = g2oct::oct::algebra_certificate();
      print_certificate(cert);
      return finish(o, "algebra-check", {cert}, {});
    }
    if (c_lie->parsed()) {
      const Certificate cert = g2oct::lie::lie_certificate();
      print_certificate(cert);
      return finish(o, "lie-check", {cert}, {});
    }
    if (c_stab->parsed()) {
      const Config cfg = load_config(o);
      genus = static_cast<int>(cfg.get_int("stability.genus", genus));
      return run_stability(o, genus, d, all_d, beta_zero, delta_zero);
    }
    if (c_mod->parsed()) {
      const int g = (c_mod->count("--genus") && !moduli_all) ? genus : 0;
      return run_moduli(o, g);
    }
    if (c_solve->parsed()) {
      const Config cfg = load_config(o);
      const auto p = problem_from_config(cfg, o);
      g2oct::hitchin::MetricGrid grid;
      std::vector<std::string> artifacts;
      const Certificate cert = solve_and_report(p, o, &grid, &artifacts);
      print_certificate(cert);
      return finish(o, "solve", {cert}, artifacts);
    }
    if (c_rec->parsed()) {
      const Config cfg = load_config(o);
      const auto p = problem_from_config(cfg, o);
      if (metric_path.empty())
        metric_path = cfg.get_string("reconstruct.metric");
      const auto grid = g2oct::hitchin::import_metric(metric_path);
      std::vector<std::string> artifacts;
      const Certificate cert =
          reconstruct_and_report(p, grid, cfg, o, &artifacts);
      print_certificate(cert);
      return finish(o, "reconstruct", {cert}, artifacts);
    }
    if (c_pipe->parsed()) {
      const Config cfg = load_config(o);
      const auto p = problem_from_config(cfg, o);
      g2oct::hitchin::MetricGrid grid;
      std::vector<std::string> artifacts;
      const Certificate solve_cert = solve_and_report(p, o, &grid, &artifacts);
      print_certificate(solve_cert);
      const Certificate curve_cert =
          reconstruct_and_report(p, grid, cfg, o, &artifacts);
      print_certificate(curve_cert);
      return finish(o, "pipeline", {solve_cert, curve_cert}, artifacts);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
