// Command line front end for the collinear-point toolkit. Subcommands map
// one-to-one onto the pipeline stages and diagnostics:
//
//   locate       collinear point abscissae
//   linearize    quadratic normalization data
//   expand       polynomial Hamiltonian around the point
//   reduce       center manifold Hamiltonian and reduction residuals
//   thresholds   resonant coefficients and halo bifurcation energies
//   poincare     surface of section z=0, pz>0
//   freqmap      averaged frequencies along a y-scan
//   fli          fast Lyapunov indicator grid
//   bifscan      numerical bifurcation oracle (stability index crossings)
//   reproduce-tables  recompute every embedded reference block and diff
//
// Exit codes: 0 success, 1 usage or configuration error, 2 numerical
// failure, 3 reference diff beyond tolerance.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "halo/bifurcation.hpp"
#include "halo/cmflow.hpp"
#include "halo/fli.hpp"
#include "halo/freqmap.hpp"
#include "halo/io.hpp"
#include "halo/pipeline.hpp"
#include "halo/reference.hpp"
#include "halo/sections.hpp"

namespace {

using namespace halo;

struct ModelOpts {
  std::optional<std::string> system;
  std::string systems_file;
  std::optional<double> mu;
  std::optional<double> beta;
  std::optional<double> A;
  std::string point = "L1";
  int degree = 4;
  std::string out;

  void attach(CLI::App* cmd, bool with_point = true, bool with_degree = true) {
    cmd->add_option("--system", system, "named system from the builtin table");
    cmd->add_option("--systems-file", systems_file,
                    "read system definitions from a delimited file");
    cmd->add_option("--mu", mu, "mass ratio (overrides --system)");
    cmd->add_option("--beta", beta, "sail performance");
    cmd->add_option("--A", A, "oblateness coefficient");
    if (with_point)
      cmd->add_option("--point", point, "collinear point L1, L2 or L3");
    if (with_degree)
      cmd->add_option("--degree", degree, "truncation degree of the expansion")
          ->check(CLI::Range(4, 12));
    cmd->add_option("--out", out, "output file (default stdout)");
  }

  ModelParams params() const {
    if (mu) return build_params(*mu, beta.value_or(0.0), A.value_or(0.0));
    if (!system)
      throw DomainError("specify a model with --system or with --mu");
    const auto table =
        systems_file.empty() ? builtin_systems() : load_systems_file(systems_file);
    const SystemRecord& r = find_system(table, *system);
    return build_params(r.mu, beta.value_or(r.beta), A.value_or(r.A));
  }

  int point_index() const {
    if (point == "L1") return 1;
    if (point == "L2") return 2;
    if (point == "L3") return 3;
    throw DomainError("unknown point (use L1, L2 or L3): " + point);
  }
};

// All writers stream to the chosen sink; stdout when --out is absent.
struct Sink {
  explicit Sink(const std::string& path) {
    if (!path.empty()) file = std::make_unique<std::ofstream>(open_output(path));
  }
  std::ostream& stream() { return file ? *file : std::cout; }
  std::unique_ptr<std::ofstream> file;
};

void print_kv(std::ostream& out, const char* key, double value) {
  out << key << "\t" << format_shortest(value) << "\n";
}

int run_locate(const ModelOpts& opts, bool point_given) {
  ModelParams p = opts.params();
  Sink sink(opts.out);
  std::ostream& out = sink.stream();
  out << "# point gamma X alpha\n";
  std::vector<int> points =
      point_given ? std::vector<int>{opts.point_index()} : std::vector<int>{1, 2, 3};
  for (int j : points) {
    CollinearPoint cp = locate(p, j);
    out << "L" << j << "\t" << format_shortest(cp.gamma) << "\t"
        << format_shortest(cp.X) << "\t" << format_shortest(cp.alpha) << "\n";
  }
  return 0;
}

int run_linearize(const ModelOpts& opts) {
  ModelParams p = opts.params();
  const int j = opts.point_index();
  CollinearPoint cp = locate(p, j);
  LinearData lin = linearize(p, j, cp.alpha);
  Sink sink(opts.out);
  std::ostream& out = sink.stream();
  print_kv(out, "gamma", cp.gamma);
  print_kv(out, "X", cp.X);
  print_kv(out, "alpha", cp.alpha);
  print_kv(out, "a", lin.a);
  print_kv(out, "b", lin.b);
  print_kv(out, "c", lin.c);
  print_kv(out, "Delta", lin.Delta);
  print_kv(out, "lambda1", lin.lam1);
  print_kv(out, "omega1", lin.om1);
  print_kv(out, "omega2", lin.om2);
  print_kv(out, "s1", lin.s1);
  print_kv(out, "s2", lin.s2);
  print_kv(out, "symplectic_defect", symplectic_defect(lin.C));
  return 0;
}

int run_expand(const ModelOpts& opts) {
  ModelParams p = opts.params();
  CollinearPoint cp = locate(p, opts.point_index());
  ExpansionResult ex = expand_hamiltonian(p, cp.gamma, cp.alpha, opts.degree);
  Sink sink(opts.out);
  std::ostream& out = sink.stream();
  out << "# Hamiltonian expansion, variables x y z px py pz, degree "
      << opts.degree << "\n";
  out << "# gradient residual " << format_shortest(ex.gradient_residual)
      << "\n";
  write_series(out, ex.H);
  return 0;
}

int run_reduce(const ModelOpts& opts) {
  ModelParams p = opts.params();
  PipelineResult r = run_pipeline(p, opts.point_index(), opts.degree);
  Sink sink(opts.out);
  std::ostream& out = sink.stream();
  out << "# center manifold Hamiltonian, variables y z py pz, degree "
      << opts.degree << "\n";
  out << "# residuals: basis " << format_shortest(r.cm.basis_residual)
      << ", quadratic " << format_shortest(r.cm.quad_residual) << ", imaginary "
      << format_shortest(r.cm.imag_residual) << "\n";
  double hom = 0.0;
  for (double v : r.cm.residuals) hom = std::max(hom, v);
  out << "# residuals: homological max " << format_shortest(hom) << "\n";
  write_series(out, r.cm.CM);
  return 0;
}

int run_thresholds(const ModelOpts& opts) {
  ModelParams p = opts.params();
  PipelineResult r = run_pipeline(p, opts.point_index(), opts.degree);
  Sink sink(opts.out);
  std::ostream& out = sink.stream();
  print_kv(out, "omega_p", r.resonant.omp);
  print_kv(out, "omega_v", r.resonant.omv);
  print_kv(out, "delta", r.resonant.delta);
  print_kv(out, "a20", r.resonant.a20);
  print_kv(out, "a02", r.resonant.a02);
  print_kv(out, "a11", r.resonant.a11);
  print_kv(out, "b11", r.resonant.b11);
  print_kv(out, "E_iy", r.th.E_iy);
  print_kv(out, "E_iz", r.th.E_iz);
  print_kv(out, "E_ly", r.th.E_ly);
  print_kv(out, "E_lz", r.th.E_lz);
  print_kv(out, "h_iy", r.th.h_iy);
  print_kv(out, "h_iz", r.th.h_iz);
  print_kv(out, "h_ly", r.th.h_ly);
  print_kv(out, "h_lz", r.th.h_lz);
  return 0;
}

struct GridOpts {
  double energy = 0.0;
  double tol = 1e-12;
};

int run_poincare(const ModelOpts& opts, const GridOpts& g, int n_crossings,
                 int ny, std::vector<double> seeds, double py0, double t_max) {
  ModelParams p = opts.params();
  PipelineResult r = run_pipeline(p, opts.point_index(), opts.degree);
  CMFlow flow(r.cm.CM);
  if (seeds.empty()) {
    const double yb = section_boundary_y(flow, g.energy);
    for (int i = 0; i < ny; ++i) {
      const double f = (i + 1.0) / (ny + 1.0);
      seeds.push_back(-yb + 2.0 * yb * f);
    }
  }
  Sink sink(opts.out);
  std::ostream& out = sink.stream();
  out << "# orbit y py t\n";
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const double y0 = seeds[i];
    auto pz = solve_pz(flow, g.energy, y0, py0);
    if (!pz) {
      out << "# seed " << i << " y0 " << format_g(y0) << " off shell, skipped\n";
      continue;
    }
    SectionOrbit orbit =
        poincare_crossings(flow, g.energy, y0, py0, n_crossings, t_max, g.tol);
    if (orbit.escaped) {
      out << "# seed " << i << " y0 " << format_g(y0) << " escaped, excluded\n";
      continue;
    }
    for (const auto& pt : orbit.points)
      out << i << "\t" << format_g(pt.y) << "\t" << format_g(pt.py) << "\t"
          << format_g(pt.t) << "\n";
  }
  return 0;
}

int run_freqmap(const ModelOpts& opts, const GridOpts& g, int n, double y_lo,
                double y_hi, double py0) {
  ModelParams p = opts.params();
  PipelineResult r = run_pipeline(p, opts.point_index(), opts.degree);
  CMFlow flow(r.cm.CM);
  if (y_hi <= y_lo) {
    const double yb = section_boundary_y(flow, g.energy);
    y_lo = 0.02 * yb;
    y_hi = 0.98 * yb;
  }
  auto rows = frequency_map(r.cm.CM, g.energy, y_lo, y_hi, n, py0);
  Sink sink(opts.out);
  std::ostream& out = sink.stream();
  out << "# Jy0 omega_y omega_z omega_r\n";
  for (const auto& row : rows)
    out << format_g(row.Jy) << "\t" << format_g(row.omega_y) << "\t"
        << format_g(row.omega_z) << "\t" << format_g(row.omega_r) << "\n";
  return 0;
}

int run_fli(const ModelOpts& opts, const GridOpts& g, int ny, int npy,
            double y_span, double py_span, double T,
            std::vector<double> tangent, double escape_radius,
            unsigned long seed, double jitter) {
  ModelParams p = opts.params();
  PipelineResult r = run_pipeline(p, opts.point_index(), opts.degree);
  CMFlow flow(r.cm.CM);
  if (y_span <= 0.0) y_span = 1.05 * section_boundary_y(flow, g.energy);
  if (py_span <= 0.0) py_span = y_span;
  Vec<4> v0{1.0, 0.0, 0.0, 0.0};
  if (!tangent.empty()) {
    if (tangent.size() != 4)
      throw DomainError("--tangent needs exactly four components");
    for (int i = 0; i < 4; ++i) v0[static_cast<std::size_t>(i)] = tangent[static_cast<std::size_t>(i)];
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(-0.5, 0.5);
  Sink sink(opts.out);
  std::ostream& out = sink.stream();
  out << "# y py fli\n";
  const double dy = ny > 1 ? 2.0 * y_span / (ny - 1) : 0.0;
  const double dpy = npy > 1 ? 2.0 * py_span / (npy - 1) : 0.0;
  for (int i = 0; i < ny; ++i) {
    for (int k = 0; k < npy; ++k) {
      double y = -y_span + i * dy;
      double py = -py_span + k * dpy;
      if (jitter > 0.0) {
        y += jitter * dy * uni(rng);
        py += jitter * dpy * uni(rng);
      }
      auto pz = solve_pz(flow, g.energy, y, py);
      if (!pz) continue;
      FLIResult res =
          fli(flow, Vec<4>{y, 0.0, py, *pz}, v0, T, escape_radius, g.tol);
      const double value = res.escaped ? fli_escape_sentinel : res.value;
      out << format_g(y) << "\t" << format_g(py) << "\t" << format_g(value)
          << "\n";
    }
  }
  return 0;
}

int run_bifscan(const ModelOpts& opts, const GridOpts& g, std::string mode,
                double h_lo, double h_hi, double step) {
  ModelParams p = opts.params();
  PipelineResult r = run_pipeline(p, opts.point_index(), opts.degree);
  CMFlow flow(r.cm.CM);
  std::vector<IndexCrossing> crossings;
  if (mode == "planar")
    crossings = planar_bifurcation_scan(flow, h_lo, h_hi, step, 1e-5, g.tol);
  else if (mode == "vertical")
    crossings = vertical_bifurcation_scan(flow, h_lo, h_hi, step, 1e-5, g.tol);
  else
    throw DomainError("--mode must be planar or vertical");
  Sink sink(opts.out);
  std::ostream& out = sink.stream();
  out << "# h level rising\n";
  for (const auto& c : crossings)
    out << format_shortest(c.h) << "\t" << c.level << "\t" << (c.rising ? 1 : 0)
        << "\n";
  return 0;
}

// One diff-report line per reference cell; returns the failure count.
struct DiffReport {
  std::ostream& out;
  int failures = 0;

  void cell(const std::string& block, const std::string& row,
            const std::string& quantity, double computed, double expected,
            double tol, bool relative) {
    const double diff = relative
                            ? std::abs(computed - expected) / std::abs(expected)
                            : std::abs(computed - expected);
    const bool pass = diff <= tol;
    if (!pass) ++failures;
    out << block << "\t" << row << "\t" << quantity << "\t"
        << format_g(computed, 10) << "\t" << format_g(expected, 10) << "\t"
        << format_g(diff, 3) << (relative ? " rel" : " abs") << "\t"
        << format_g(tol, 3) << "\t" << (pass ? "PASS" : "FAIL") << "\n";
  }
};

int run_reproduce(const std::string& system_filter, const std::string& out_dir) {
  namespace ref = halo::reference;
  auto selected = [&](const char* system) {
    return system_filter.empty() || system_filter == system;
  };
  DiffReport report{std::cout};
  std::cout << "# block row quantity computed reference diff tol verdict\n";

  for (const auto& row : ref::equilibrium_locations) {
    if (!selected(row.system)) continue;
    ModelParams p = load_case(row.system);
    const double ref_vals[3] = {row.L1, row.L2, row.L3};
    for (int j = 1; j <= 3; ++j) {
      CollinearPoint cp = locate(p, j);
      report.cell("equilibrium-locations", row.system, "L" + std::to_string(j),
                  cp.X, ref_vals[j - 1], ref::equilibrium_tol_abs, false);
    }
  }

  for (const auto& row : ref::linear_rows) {
    if (!selected(row.system)) continue;
    ModelParams p = load_case(row.system);
    CollinearPoint cp = locate(p, 1);
    LinearData lin = linearize(p, 1, cp.alpha);
    auto cell = [&](const char* q, double got, double want) {
      report.cell("linear-quantities", row.system, q, got, want,
                  ref::linear_tol_rel, true);
    };
    cell("gamma1", cp.gamma, row.gamma1);
    cell("abscissa", cp.X, row.abscissa);
    cell("a", lin.a, row.a);
    cell("b", lin.b, row.b);
    cell("c", lin.c, row.c);
    cell("lambda1", lin.lam1, row.lam1);
    cell("omega1", lin.om1, row.om1);
    cell("omega2", lin.om2, row.om2);
    cell("s1", lin.s1, row.s1);
    cell("s2", lin.s2, row.s2);
    report.cell("linear-quantities", row.system, "symplectic-defect",
                symplectic_defect(lin.C), 0.0, ref::symplectic_tol, false);
  }

  for (const auto& row : ref::resonant_rows) {
    if (!selected(row.system)) continue;
    const SystemRecord& rec = find_system(builtin_systems(), row.system);
    ModelParams p = build_params(rec.mu, row.beta, row.A);
    PipelineResult r = run_pipeline(p, 1, 4);
    auto cell = [&](const char* q, double got, double want) {
      report.cell("resonant-coefficients", row.label, q, got, want,
                  ref::resonant_tol_rel, true);
    };
    cell("a20", r.resonant.a20, row.a20);
    cell("a02", r.resonant.a02, row.a02);
    cell("a11", r.resonant.a11, row.a11);
    cell("b11", r.resonant.b11, row.b11);
  }

  for (const auto& row : ref::bifurcation_rows) {
    if (!selected(row.system)) continue;
    const SystemRecord& rec = find_system(builtin_systems(), row.system);
    ModelParams p = build_params(rec.mu, row.beta, row.A);
    for (int j = 1; j <= 2; ++j) {
      PipelineResult r = run_pipeline(p, j, 4);
      const std::string q = "L" + std::to_string(j);
      report.cell("bifurcation-energies", row.label, q + "-anal", r.th.h_ly,
                  row.anal[j - 1], ref::bifurcation_anal_tol_abs, false);
      CMFlow flow(r.cm.CM);
      const double lo = std::max(0.005, r.th.h_ly - 0.05);
      auto crossings =
          planar_bifurcation_scan(flow, lo, r.th.h_ly + 0.05, 0.002);
      double found = std::numeric_limits<double>::quiet_NaN();
      for (const auto& c : crossings)
        if (c.level == 1 && c.rising) {
          found = c.h;
          break;
        }
      report.cell("bifurcation-energies", row.label, q + "-num", found,
                  row.num[j - 1], ref::bifurcation_num_tol_abs, false);
    }
  }

  if (selected("sun-vesta")) {
    ModelParams p = load_case("sun-vesta");
    PipelineResult r = run_pipeline(p, 1, 4);
    for (const auto& row : ref::cm_rows) {
      Expo<4> k{static_cast<std::uint8_t>(row.k1),
                static_cast<std::uint8_t>(row.k2),
                static_cast<std::uint8_t>(row.k3),
                static_cast<std::uint8_t>(row.k4)};
      const double got = r.cm.CM.coeff(k);
      const std::string q = std::to_string(row.k1) + "," +
                            std::to_string(row.k2) + "," +
                            std::to_string(row.k3) + "," +
                            std::to_string(row.k4);
      const bool relative = std::abs(row.value) > ref::cm_abs_cutoff;
      report.cell("cm-coefficients", "sun-vesta beta=1e-2", q, got, row.value,
                  relative ? ref::cm_tol_rel : ref::cm_tol_abs, relative);
    }
  }

  if (!out_dir.empty()) {
    auto f1 = open_output(out_dir + "/systems.tsv");
    f1 << systems_table_text();
    auto f2 = open_output(out_dir + "/reference_values.tsv");
    f2 << reference_values_text();
  }

  if (report.failures == 0) {
    std::cout << "all cells within tolerance\n";
    return 0;
  }
  std::cout << report.failures << " cells out of tolerance\n";
  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"collinear libration point toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a TOML/INI file");

  ModelOpts locate_opts, linearize_opts, expand_opts, reduce_opts,
      thresholds_opts, poincare_opts, freqmap_opts, fli_opts, bifscan_opts;
  GridOpts poincare_grid, freqmap_grid, fli_grid_opts, bifscan_grid;

  auto* cmd_locate = app.add_subcommand("locate", "collinear point abscissae");
  locate_opts.attach(cmd_locate, true, false);

  auto* cmd_linearize =
      app.add_subcommand("linearize", "quadratic normalization data");
  linearize_opts.attach(cmd_linearize, true, false);

  auto* cmd_expand =
      app.add_subcommand("expand", "polynomial Hamiltonian expansion");
  expand_opts.attach(cmd_expand);

  auto* cmd_reduce =
      app.add_subcommand("reduce", "center manifold Hamiltonian");
  reduce_opts.attach(cmd_reduce);

  auto* cmd_thresholds = app.add_subcommand(
      "thresholds", "resonant coefficients and bifurcation energies");
  thresholds_opts.attach(cmd_thresholds);

  auto* cmd_poincare = app.add_subcommand("poincare", "surface of section");
  poincare_opts.attach(cmd_poincare);
  int poi_crossings = 200, poi_ny = 16;
  std::vector<double> poi_seeds;
  double poi_py0 = 0.0, poi_tmax = 5000.0;
  cmd_poincare->add_option("--energy", poincare_grid.energy, "energy level h")
      ->required();
  cmd_poincare->add_option("--n-crossings", poi_crossings,
                           "crossings recorded per orbit");
  cmd_poincare->add_option("--ny", poi_ny, "number of seeds across the section");
  cmd_poincare->add_option("--y0", poi_seeds, "explicit seed list (y values)");
  cmd_poincare->add_option("--py0", poi_py0, "seed py value");
  cmd_poincare->add_option("--t-max", poi_tmax, "integration horizon per orbit");
  cmd_poincare->add_option("--tol", poincare_grid.tol, "integration tolerance");

  auto* cmd_freqmap = app.add_subcommand("freqmap", "averaged frequency scan");
  freqmap_opts.attach(cmd_freqmap);
  int fm_n = 50;
  double fm_ylo = 0.0, fm_yhi = -1.0, fm_py0 = 0.0;
  cmd_freqmap->add_option("--energy", freqmap_grid.energy, "energy level h")
      ->required();
  cmd_freqmap->add_option("--n", fm_n, "number of scan points");
  cmd_freqmap->add_option("--y-min", fm_ylo, "scan start");
  cmd_freqmap->add_option("--y-max", fm_yhi, "scan end");
  cmd_freqmap->add_option("--py0", fm_py0, "fixed py of the scan");

  auto* cmd_fli =
      app.add_subcommand("fli", "fast Lyapunov indicator grid");
  fli_opts.attach(cmd_fli);
  int fli_ny = 40, fli_npy = 40;
  double fli_yspan = -1.0, fli_pyspan = -1.0, fli_T = 100.0, fli_escape = 10.0;
  std::vector<double> fli_tangent;
  unsigned long fli_seed = 0;
  double fli_jitter = 0.0;
  cmd_fli->add_option("--energy", fli_grid_opts.energy, "energy level h")
      ->required();
  cmd_fli->add_option("--ny", fli_ny, "grid points in y");
  cmd_fli->add_option("--npy", fli_npy, "grid points in py");
  cmd_fli->add_option("--y-span", fli_yspan, "grid half width in y");
  cmd_fli->add_option("--py-span", fli_pyspan, "grid half width in py");
  cmd_fli->add_option("--T", fli_T, "integration horizon");
  cmd_fli->add_option("--tangent", fli_tangent,
                      "initial tangent vector (four components)");
  cmd_fli->add_option("--escape-radius", fli_escape, "escape radius");
  cmd_fli->add_option("--seed", fli_seed, "seed for grid jitter");
  cmd_fli->add_option("--jitter", fli_jitter,
                      "jitter amplitude as a fraction of the cell size");
  cmd_fli->add_option("--tol", fli_grid_opts.tol, "integration tolerance");

  auto* cmd_bifscan =
      app.add_subcommand("bifscan", "stability index crossing scan");
  bifscan_opts.attach(cmd_bifscan);
  std::string bif_mode = "planar";
  double bif_hlo = 0.0, bif_hhi = 0.0, bif_step = 0.002;
  cmd_bifscan->add_option("--mode", bif_mode, "planar or vertical");
  cmd_bifscan->add_option("--h-min", bif_hlo, "scan start")->required();
  cmd_bifscan->add_option("--h-max", bif_hhi, "scan end")->required();
  cmd_bifscan->add_option("--step", bif_step, "scan step");
  cmd_bifscan->add_option("--tol", bifscan_grid.tol, "integration tolerance");

  auto* cmd_repro = app.add_subcommand(
      "reproduce-tables", "recompute reference blocks and report diffs");
  std::string repro_system, repro_out;
  cmd_repro->add_option("--system", repro_system, "restrict to one system");
  cmd_repro->add_option("--out", repro_out,
                        "directory for regenerated data files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_locate->parsed())
      return run_locate(locate_opts, cmd_locate->count("--point") > 0);
    if (cmd_linearize->parsed()) return run_linearize(linearize_opts);
    if (cmd_expand->parsed()) return run_expand(expand_opts);
    if (cmd_reduce->parsed()) return run_reduce(reduce_opts);
    if (cmd_thresholds->parsed()) return run_thresholds(thresholds_opts);
    if (cmd_poincare->parsed())
      return run_poincare(poincare_opts, poincare_grid, poi_crossings, poi_ny,
                          poi_seeds, poi_py0, poi_tmax);
    if (cmd_freqmap->parsed())
      return run_freqmap(freqmap_opts, freqmap_grid, fm_n, fm_ylo, fm_yhi,
                         fm_py0);
    if (cmd_fli->parsed())
      return run_fli(fli_opts, fli_grid_opts, fli_ny, fli_npy, fli_yspan,
                     fli_pyspan, fli_T, fli_tangent, fli_escape, fli_seed,
                     fli_jitter);
    if (cmd_bifscan->parsed())
      return run_bifscan(bifscan_opts, bifscan_grid, bif_mode, bif_hlo,
                         bif_hhi, bif_step);
    if (cmd_repro->parsed()) return run_reproduce(repro_system, repro_out);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
