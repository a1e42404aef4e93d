// gll: critical-point queries, Gauss-Lucas verification runs, Steiner
// inellipse construction, and potential field-map rendering over the JSON
// wire formats used across the library.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "gll/electrostatics.hpp"
#include "gll/errors.hpp"
#include "gll/fieldmap.hpp"
#include "gll/json_io.hpp"
#include "gll/marden.hpp"
#include "gll/sampling.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitIoFailure = 4;

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("GLL_LOG");
    if (env == nullptr) return 0;
    const std::string v(env);
    if (v == "debug") return 2;
    if (v == "info") return 1;
    return 0;
  }();
  return level;
}

void log_info(const std::string& msg) {
  if (log_level() >= 1) std::cerr << "[gll] " << msg << "\n";
}

void log_debug(const std::string& msg) {
  if (log_level() >= 2) std::cerr << "[gll:debug] " << msg << "\n";
}

struct InputSource {
  std::string inline_json;
  std::string path;

  bool present() const { return !inline_json.empty() || !path.empty(); }

  std::string read() const {
    if (!inline_json.empty() && !path.empty()) {
      throw std::invalid_argument("give the input either inline or via --in, not both");
    }
    if (!inline_json.empty()) return inline_json;
    if (path == "-") {
      std::stringstream buffer;
      buffer << std::cin.rdbuf();
      return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read input file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
};

gll::RootSet parse_root_set(const InputSource& input) {
  if (!input.present()) throw std::invalid_argument("missing input (inline JSON or --in PATH)");
  return gll::root_set_from_json(gll::Json::parse(input.read()));
}

std::string format_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

int cmd_critical(const InputSource& input, double tol) {
  const gll::RootSet roots = parse_root_set(input);
  if (roots.total_multiplicity() < 2) {
    throw std::invalid_argument("critical: need total multiplicity >= 2");
  }
  gll::SolverConfig solver;
  solver.tol = tol;
  const gll::ChargeConfiguration cfg{roots};
  const gll::SolveReport report = gll::solve_critical_points(cfg, solver);
  std::cout << gll::to_json(report.roots).dump() << "\n";
  std::cerr << "max_residual=" << format_double("%.6e", report.max_residual) << "\n";
  if (!report.converged) {
    std::cerr << "solver did not converge after " << report.iterations << " sweeps\n";
    return kExitNonConvergence;
  }
  log_debug("converged in " + std::to_string(report.iterations) + " sweeps");
  return kExitOk;
}

int cmd_verify_single(const InputSource& input, double tol, double eps_rel) {
  const gll::RootSet roots = parse_root_set(input);
  if (roots.total_multiplicity() < 2) {
    throw std::invalid_argument("verify: need total multiplicity >= 2");
  }
  gll::SolverConfig solver;
  solver.tol = tol;
  const gll::ChargeConfiguration cfg{roots};
  const gll::Hull hull = gll::convex_hull(cfg.charges.locations());
  const double eps = gll::default_containment_eps(hull, eps_rel);
  const gll::GaussLucasReport report = gll::gauss_lucas_report(cfg, solver, eps);
  std::cout << gll::to_json(report).dump() << "\n";
  if (!report.solver_converged) return kExitNonConvergence;
  return report.contained ? kExitOk : kExitVerifyFailed;
}

int cmd_verify_random(int trials, int degree, std::uint64_t seed, double tol, double eps_rel) {
  if (trials < 1) throw std::invalid_argument("verify: --random needs a positive count");
  if (degree != 0 && (degree < 2 || degree > gll::kMaxDegree)) {
    throw std::invalid_argument("verify: --degree out of range");
  }
  gll::SolverConfig solver;
  solver.tol = tol;
  std::mt19937_64 rng(seed);
  int failures = 0;
  int nonconverged = 0;
  double worst_margin = -std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    const int deg = degree != 0 ? degree : 2 + trial % 11;
    const gll::ChargeConfiguration cfg{gll::random_simple_roots(rng, deg, 2.0, 1e-2)};
    const gll::Hull hull = gll::convex_hull(cfg.charges.locations());
    const double eps = gll::default_containment_eps(hull, eps_rel);
    const gll::GaussLucasReport report = gll::gauss_lucas_report(cfg, solver, eps);
    worst_margin = std::max(worst_margin, report.worst_signed_distance);
    if (!report.solver_converged) ++nonconverged;  // recorded, not dropped
    if (!report.contained) ++failures;
    log_debug("trial " + std::to_string(trial) + " degree " + std::to_string(deg) +
              " worst " + format_double("%.3e", report.worst_signed_distance));
  }
  const gll::Json summary{{"trials", trials},
                          {"failures", failures},
                          {"nonconverged", nonconverged},
                          {"worst_margin", worst_margin},
                          {"eps_rel", eps_rel},
                          {"seed", seed}};
  std::cout << summary.dump() << "\n";
  if (nonconverged > 0) return kExitNonConvergence;
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_inellipse(const InputSource& input) {
  if (!input.present()) throw std::invalid_argument("missing input (inline JSON or --in PATH)");
  const gll::Json j = gll::Json::parse(input.read());
  if (!j.is_array() || j.size() != 3) {
    throw std::invalid_argument("inellipse: expected [[re,im],[re,im],[re,im]]");
  }
  gll::Complex v[3];
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != 2) {
      throw std::invalid_argument("inellipse: vertex must be [re, im]");
    }
    v[i] = {j[i][0].get<double>(), j[i][1].get<double>()};
  }
  const gll::Ellipse e = gll::steiner_inellipse(v[0], v[1], v[2]);
  const double scale = std::max({std::abs(v[0] - v[1]), std::abs(v[1] - v[2]),
                                 std::abs(v[2] - v[0])});
  const double tol = 1e-8 * scale;
  const gll::Json tangencies = gll::Json::array({
      gll::tangency_check(e, v[0], v[1], tol),
      gll::tangency_check(e, v[1], v[2], tol),
      gll::tangency_check(e, v[2], v[0], tol),
  });

  // Agreement between the foci and the independently solved critical points.
  const gll::ChargeConfiguration cfg{gll::RootSet({{v[0], 1}, {v[1], 1}, {v[2], 1}})};
  const gll::RootSet critical = gll::critical_points(cfg);
  std::vector<gll::Complex> crit;
  for (const auto& entry : critical.entries()) {
    for (int k = 0; k < entry.multiplicity; ++k) crit.push_back(entry.location);
  }
  double agreement = std::numeric_limits<double>::infinity();
  if (crit.size() == 2) {
    const double d1 = std::max(std::abs(crit[0] - e.focus1), std::abs(crit[1] - e.focus2));
    const double d2 = std::max(std::abs(crit[0] - e.focus2), std::abs(crit[1] - e.focus1));
    agreement = std::min(d1, d2);
  }

  gll::Json out{{"ellipse", gll::to_json(e)},
                {"tangencies", tangencies},
                {"foci_vs_critical", agreement}};
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int cmd_render(const InputSource& input, const std::string& out_path, const std::string& grid_spec,
               int levels, const std::string& bbox_spec, const std::string& csv_path, double tol) {
  if (out_path.empty()) throw std::invalid_argument("render: --out PATH is required");
  const gll::RootSet roots = parse_root_set(input);
  const gll::ChargeConfiguration cfg{roots};

  int nx = 512, ny = 512;
  if (!grid_spec.empty() &&
      (std::sscanf(grid_spec.c_str(), "%dx%d", &nx, &ny) != 2 || nx < 2 || ny < 2)) {
    throw std::invalid_argument("render: --grid expects NxM with N, M >= 2");
  }
  gll::BoundingBox bbox = gll::default_figure_bbox(cfg);
  if (!bbox_spec.empty()) {
    double x0, y0, x1, y1;
    if (std::sscanf(bbox_spec.c_str(), "%lf,%lf,%lf,%lf", &x0, &y0, &x1, &y1) != 4 ||
        !(x1 > x0) || !(y1 > y0)) {
      throw std::invalid_argument("render: --bbox expects x0,y0,x1,y1 with positive extent");
    }
    bbox = {x0, y0, x1, y1};
  }

  log_info("sampling " + std::to_string(nx) + "x" + std::to_string(ny) + " grid");
  const gll::Grid grid = gll::sample_potential(cfg, bbox, nx, ny);

  gll::Scene scene;
  scene.bbox = bbox;
  scene.contours = gll::contour_lines(grid, gll::auto_levels(grid, levels));
  scene.charge_marks = roots.locations();
  if (roots.total_multiplicity() >= 2) {
    gll::SolverConfig solver;
    solver.tol = tol;
    scene.critical_marks = gll::critical_points(cfg, solver).locations();
  }
  gll::render_svg(scene, out_path);

  if (!csv_path.empty()) {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw gll::IoFailure("render: cannot open CSV output: " + csv_path);
    gll::write_grid_csv(grid, csv);
    if (!csv) throw gll::IoFailure("render: CSV write failed: " + csv_path);
  }

  std::cout << "harmonicity_residual=" << format_double("%.6e", gll::harmonicity_residual(grid))
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"electrostatic Gauss-Lucas toolkit"};
  app.require_subcommand(1);

  InputSource input;
  double tol = 1e-12;
  double eps_rel = 1e-9;
  int levels = 24;
  int random_trials = 0;
  int degree = 0;
  std::uint64_t seed = 0;
  std::string out_path, grid_spec, bbox_spec, csv_path;

  const auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input.inline_json, "inline JSON input");
    cmd->add_option("--in", input.path, "input file path ('-' for stdin)");
  };

  CLI::App* critical = app.add_subcommand("critical", "critical points of the charge potential");
  add_input(critical);
  critical->add_option("--tol", tol, "root-solver residual target");

  CLI::App* verify = app.add_subcommand("verify", "check critical points against the hull");
  add_input(verify);
  verify->add_option("--tol", tol, "root-solver residual target");
  verify->add_option("--eps", eps_rel, "containment slack relative to hull diameter");
  verify->add_option("--random", random_trials, "run N random trials instead of one input");
  verify->add_option("--degree", degree, "fixed degree for random trials (default: cycle 2-12)");
  verify->add_option("--seed", seed, "random seed");

  CLI::App* inellipse = app.add_subcommand("inellipse", "Steiner inellipse of a triangle");
  add_input(inellipse);

  CLI::App* render = app.add_subcommand("render", "SVG potential map with charges marked");
  add_input(render);
  render->add_option("--out", out_path, "output SVG path");
  render->add_option("--grid", grid_spec, "sample grid size NxM (default 512x512)");
  render->add_option("--levels", levels, "number of quantile contour levels");
  render->add_option("--bbox", bbox_spec, "view box x0,y0,x1,y1 (default: inflated hull box)");
  render->add_option("--csv", csv_path, "also dump the sampled grid as CSV");
  render->add_option("--tol", tol, "root-solver residual target");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (critical->parsed()) return cmd_critical(input, tol);
    if (verify->parsed()) {
      if (random_trials > 0) {
        if (input.present()) {
          throw std::invalid_argument("verify: --random and an input are mutually exclusive");
        }
        return cmd_verify_random(random_trials, degree, seed, tol, eps_rel);
      }
      return cmd_verify_single(input, tol, eps_rel);
    }
    if (inellipse->parsed()) return cmd_inellipse(input);
    if (render->parsed()) {
      return cmd_render(input, out_path, grid_spec, levels, bbox_spec, csv_path, tol);
    }
  } catch (const gll::IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoFailure;
  } catch (const gll::NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const gll::Json::exception& e) {
    std::cerr << "error: invalid JSON input: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
