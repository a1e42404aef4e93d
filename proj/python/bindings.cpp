#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>

#include "gll/complex_poly.hpp"
#include "gll/electrostatics.hpp"
#include "gll/errors.hpp"
#include "gll/fieldmap.hpp"
#include "gll/geometry.hpp"
#include "gll/json_io.hpp"
#include "gll/marden.hpp"
#include "gll/root_solver.hpp"
#include "gll/sampling.hpp"

namespace py = pybind11;

namespace {

gll::RootSet root_set_from_pairs(const std::vector<std::pair<gll::Complex, int>>& pairs) {
  std::vector<gll::RootEntry> entries;
  entries.reserve(pairs.size());
  for (const auto& [location, multiplicity] : pairs) entries.push_back({location, multiplicity});
  return gll::RootSet(std::move(entries));
}

std::vector<std::pair<gll::Complex, int>> entries_as_pairs(const gll::RootSet& roots) {
  std::vector<std::pair<gll::Complex, int>> out;
  out.reserve(roots.size());
  for (const gll::RootEntry& e : roots.entries()) out.emplace_back(e.location, e.multiplicity);
  return out;
}

}  // namespace

PYBIND11_MODULE(_gll, m) {
  m.doc() = "Electrostatics of polynomial roots: critical points, hull "
            "containment, Steiner inellipses, and potential field maps";
  m.attr("__version__") = "0.1.0";

  py::register_exception<gll::PoleError>(m, "PoleError");
  py::register_exception<gll::StalledAtCriticalPoint>(m, "StalledAtCriticalPoint");
  py::register_exception<gll::DegenerateTriangle>(m, "DegenerateTriangle");
  py::register_exception<gll::NotSeparable>(m, "NotSeparable");
  py::register_exception<gll::TooFewSamples>(m, "TooFewSamples");
  py::register_exception<gll::IoFailure>(m, "IoFailure");
  py::register_exception<gll::NonConvergence>(m, "NonConvergence");

  py::class_<gll::RootSet>(m, "RootSet")
      .def(py::init<>())
      .def(py::init(&root_set_from_pairs), py::arg("entries"),
           "Build from [(location, multiplicity), ...]; equal locations merge.")
      .def(py::init([](const std::vector<gll::Complex>& points) {
             return gll::RootSet::from_points(points);
           }),
           py::arg("points"), "Build from plain locations, multiplicity 1 each.")
      .def("entries", &entries_as_pairs)
      .def("locations", &gll::RootSet::locations)
      .def("total_multiplicity", &gll::RootSet::total_multiplicity)
      .def("extent", &gll::RootSet::extent)
      .def("as_json", [](const gll::RootSet& rs) { return gll::to_json(rs).dump(); })
      .def("__len__", &gll::RootSet::size)
      .def("__repr__", [](const gll::RootSet& rs) {
        return "RootSet(" + gll::to_json(rs).dump() + ")";
      });

  py::class_<gll::Polynomial>(m, "Polynomial")
      .def(py::init<>())
      .def(py::init<std::vector<gll::Complex>>(), py::arg("coeffs"),
           "Coefficients low degree first.")
      .def("coeffs", [](const gll::Polynomial& p) { return p.coeffs(); })
      .def("degree", &gll::Polynomial::degree)
      .def("is_zero", &gll::Polynomial::is_zero)
      .def("__call__", [](const gll::Polynomial& p, gll::Complex z) { return evaluate(p, z); })
      .def("__repr__", [](const gll::Polynomial& p) {
        return "Polynomial(" + gll::to_json(p).dump() + ")";
      });

  m.def("from_roots", &gll::from_roots, py::arg("roots"));
  m.def("derivative", &gll::derivative, py::arg("p"));
  m.def("evaluate", &gll::evaluate, py::arg("p"), py::arg("z"));
  m.def("log_derivative", &gll::log_derivative, py::arg("roots"), py::arg("z"));
  m.def("pole_guard_radius", &gll::pole_guard_radius, py::arg("roots"));

  py::class_<gll::SolverConfig>(m, "SolverConfig")
      .def(py::init([](double tol, int max_iter, double cluster_radius) {
             gll::SolverConfig cfg;
             cfg.tol = tol;
             cfg.max_iter = max_iter;
             cfg.cluster_radius = cluster_radius;
             return cfg;
           }),
           py::arg("tol") = 1e-12, py::arg("max_iter") = 200, py::arg("cluster_radius") = 1e-7)
      .def_readwrite("tol", &gll::SolverConfig::tol)
      .def_readwrite("max_iter", &gll::SolverConfig::max_iter)
      .def_readwrite("cluster_radius", &gll::SolverConfig::cluster_radius);

  py::class_<gll::SolveReport>(m, "SolveReport")
      .def_readonly("roots", &gll::SolveReport::roots)
      .def_readonly("iterations", &gll::SolveReport::iterations)
      .def_readonly("max_residual", &gll::SolveReport::max_residual)
      .def_readonly("converged", &gll::SolveReport::converged)
      .def("as_json", [](const gll::SolveReport& r) { return gll::to_json(r).dump(); });

  m.def("cauchy_bound", &gll::cauchy_bound, py::arg("p"));
  m.def("residual_scale", &gll::residual_scale, py::arg("p"));
  m.def("find_roots", &gll::find_roots, py::arg("p"), py::arg("config") = gll::SolverConfig{});
  m.def("refine_root", &gll::refine_root, py::arg("p"), py::arg("z0"));

  py::class_<gll::Hull>(m, "Hull")
      .def("vertices", [](const gll::Hull& h) { return h.vertices(); })
      .def("__len__", &gll::Hull::size);

  py::class_<gll::Witness>(m, "Witness")
      .def_readonly("direction", &gll::Witness::direction)
      .def_readonly("margin", &gll::Witness::margin);

  m.def("convex_hull", [](const std::vector<gll::Complex>& pts) { return gll::convex_hull(pts); },
        py::arg("points"));
  m.def("signed_distance", &gll::signed_distance, py::arg("hull"), py::arg("p"));
  m.def("contains", &gll::contains, py::arg("hull"), py::arg("p"), py::arg("eps"));
  m.def("separating_direction", &gll::separating_direction, py::arg("hull"), py::arg("z"),
        py::arg("eps"));
  m.def("diameter", &gll::diameter, py::arg("hull"));

  py::class_<gll::ChargeConfiguration>(m, "ChargeConfiguration")
      .def(py::init<gll::RootSet>(), py::arg("charges"))
      .def_readonly("charges", &gll::ChargeConfiguration::charges)
      .def("total_charge", &gll::ChargeConfiguration::total_charge);

  py::class_<gll::FieldVector>(m, "FieldVector")
      .def_readonly("ex", &gll::FieldVector::ex)
      .def_readonly("ey", &gll::FieldVector::ey)
      .def("__iter__", [](const gll::FieldVector& f) {
        return py::iter(py::make_tuple(f.ex, f.ey));
      });

  m.def("potential", &gll::potential, py::arg("config"), py::arg("z"));
  m.def("field", &gll::field, py::arg("config"), py::arg("z"));
  m.def("field_via_log_derivative", &gll::field_via_log_derivative, py::arg("config"),
        py::arg("z"));
  m.def("solve_critical_points", &gll::solve_critical_points, py::arg("config"),
        py::arg("solver") = gll::SolverConfig{});
  m.def("critical_points", &gll::critical_points, py::arg("config"),
        py::arg("solver") = gll::SolverConfig{});

  py::class_<gll::CriticalPointCheck>(m, "CriticalPointCheck")
      .def_readonly("location", &gll::CriticalPointCheck::location)
      .def_readonly("multiplicity", &gll::CriticalPointCheck::multiplicity)
      .def_readonly("contained", &gll::CriticalPointCheck::contained)
      .def_readonly("at_charge", &gll::CriticalPointCheck::at_charge)
      .def_readonly("field_magnitude", &gll::CriticalPointCheck::field_magnitude)
      .def_readonly("witness", &gll::CriticalPointCheck::witness);

  py::class_<gll::GaussLucasReport>(m, "GaussLucasReport")
      .def_readonly("critical", &gll::GaussLucasReport::critical)
      .def_readonly("hull", &gll::GaussLucasReport::hull)
      .def_readonly("checks", &gll::GaussLucasReport::checks)
      .def_readonly("contained", &gll::GaussLucasReport::contained)
      .def_readonly("max_field_at_critical", &gll::GaussLucasReport::max_field_at_critical)
      .def_readonly("eps", &gll::GaussLucasReport::eps)
      .def_readonly("solver_converged", &gll::GaussLucasReport::solver_converged)
      .def_readonly("worst_signed_distance", &gll::GaussLucasReport::worst_signed_distance)
      .def("as_json", [](const gll::GaussLucasReport& r) { return gll::to_json(r).dump(); });

  m.def("gauss_lucas_report", &gll::gauss_lucas_report, py::arg("config"), py::arg("solver"),
        py::arg("eps"));
  m.def("default_containment_eps", &gll::default_containment_eps, py::arg("hull"),
        py::arg("rel") = 1e-9);

  py::class_<gll::Ellipse>(m, "Ellipse")
      .def(py::init([](gll::Complex f1, gll::Complex f2, double a) {
             return gll::Ellipse{f1, f2, a};
           }),
           py::arg("focus1"), py::arg("focus2"), py::arg("semi_major"))
      .def_readonly("focus1", &gll::Ellipse::focus1)
      .def_readonly("focus2", &gll::Ellipse::focus2)
      .def_readonly("semi_major", &gll::Ellipse::semi_major)
      .def("center", &gll::Ellipse::center)
      .def("semi_minor", &gll::Ellipse::semi_minor)
      .def("as_json", [](const gll::Ellipse& e) { return gll::to_json(e).dump(); });

  m.def("steiner_inellipse", &gll::steiner_inellipse, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("on_boundary", &gll::on_boundary, py::arg("ellipse"), py::arg("p"), py::arg("tol"));
  m.def("tangency_check", &gll::tangency_check, py::arg("ellipse"), py::arg("side_start"),
        py::arg("side_end"), py::arg("tol"));
  m.def("ellipse_area", &gll::ellipse_area, py::arg("ellipse"));

  py::class_<gll::BoundingBox>(m, "BoundingBox")
      .def(py::init([](double x0, double y0, double x1, double y1) {
             return gll::BoundingBox{x0, y0, x1, y1};
           }),
           py::arg("x0"), py::arg("y0"), py::arg("x1"), py::arg("y1"))
      .def_readwrite("x0", &gll::BoundingBox::x0)
      .def_readwrite("y0", &gll::BoundingBox::y0)
      .def_readwrite("x1", &gll::BoundingBox::x1)
      .def_readwrite("y1", &gll::BoundingBox::y1);

  py::class_<gll::Grid>(m, "Grid")
      .def("nx", &gll::Grid::nx)
      .def("ny", &gll::Grid::ny)
      .def("value", &gll::Grid::value, py::arg("i"), py::arg("j"))
      .def("masked", &gll::Grid::masked, py::arg("i"), py::arg("j"))
      .def("masked_count", &gll::Grid::masked_count)
      .def("cell_diagonal", &gll::Grid::cell_diagonal)
      .def("values", [](const gll::Grid& g) { return g.values(); });

  m.def("sample_potential", &gll::sample_potential, py::arg("config"), py::arg("box"),
        py::arg("nx"), py::arg("ny"));
  m.def("auto_levels", &gll::auto_levels, py::arg("grid"), py::arg("n"));
  m.def("contour_lines",
        [](const gll::Grid& g, const std::vector<double>& levels) {
          return gll::contour_lines(g, levels);
        },
        py::arg("grid"), py::arg("levels"));
  m.def("harmonicity_residual", &gll::harmonicity_residual, py::arg("grid"));

  py::class_<gll::Scene>(m, "Scene")
      .def(py::init<>())
      .def_readwrite("contours", &gll::Scene::contours)
      .def_readwrite("charge_marks", &gll::Scene::charge_marks)
      .def_readwrite("critical_marks", &gll::Scene::critical_marks)
      .def_readwrite("bbox", &gll::Scene::bbox);

  m.def("render_svg_string", &gll::render_svg_string, py::arg("scene"));
  m.def("render_svg", &gll::render_svg, py::arg("scene"), py::arg("path"));
  m.def("default_figure_bbox", &gll::default_figure_bbox, py::arg("config"));

  m.def("random_simple_roots",
        [](std::uint64_t seed, int degree, double radius, double min_sep) {
          std::mt19937_64 rng(seed);
          return gll::random_simple_roots(rng, degree, radius, min_sep);
        },
        py::arg("seed"), py::arg("degree"), py::arg("radius") = 2.0, py::arg("min_sep") = 1e-2,
        "Seeded sampler matching the CLI's --random trial generator.");
}
