#include "gll/electrostatics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "gll/errors.hpp"

namespace gll {

namespace {

constexpr double kInvTwoPi = 1.0 / (2.0 * std::numbers::pi);

void require_away_from_charges(const ChargeConfiguration& cfg, Complex z) {
  const double guard = pole_guard_radius(cfg.charges);
  for (const RootEntry& e : cfg.charges.entries()) {
    if (std::abs(z - e.location) <= guard) {
      throw PoleError("evaluation point is at a charge location");
    }
  }
}

}  // namespace

ChargeConfiguration::ChargeConfiguration(RootSet rs) : charges(std::move(rs)) {
  if (charges.empty()) {
    throw std::invalid_argument("ChargeConfiguration requires at least one charge");
  }
}

double potential(const ChargeConfiguration& cfg, Complex z) {
  require_away_from_charges(cfg, z);
  double sum = 0.0;
  for (const RootEntry& e : cfg.charges.entries()) {
    sum += e.multiplicity * std::log(std::abs(z - e.location));
  }
  return -kInvTwoPi * sum;
}

FieldVector field(const ChargeConfiguration& cfg, Complex z) {
  require_away_from_charges(cfg, z);
  double ex = 0.0, ey = 0.0;
  for (const RootEntry& e : cfg.charges.entries()) {
    const Complex d = z - e.location;
    const double w = e.multiplicity / std::norm(d);
    ex += w * d.real();
    ey += w * d.imag();
  }
  return {kInvTwoPi * ex, kInvTwoPi * ey};
}

FieldVector field_via_log_derivative(const ChargeConfiguration& cfg, Complex z) {
  const Complex ld = log_derivative(cfg.charges, z);  // pole guard lives there
  return {kInvTwoPi * ld.real(), -kInvTwoPi * ld.imag()};
}

SolveReport solve_critical_points(const ChargeConfiguration& cfg, const SolverConfig& solver) {
  if (cfg.total_charge() < 2) {
    throw std::invalid_argument("critical points require total charge >= 2");
  }
  return find_roots(derivative(from_roots(cfg.charges)), solver);
}

RootSet critical_points(const ChargeConfiguration& cfg, const SolverConfig& solver) {
  SolveReport report = solve_critical_points(cfg, solver);
  if (!report.converged) {
    throw NonConvergence("critical_points: root solver did not converge", std::move(report));
  }
  return report.roots;
}

GaussLucasReport gauss_lucas_report(const ChargeConfiguration& cfg, const SolverConfig& solver,
                                    double eps) {
  if (eps < 0.0) throw std::invalid_argument("gauss_lucas_report: eps must be >= 0");

  GaussLucasReport report;
  report.eps = eps;

  const SolveReport solve = solve_critical_points(cfg, solver);
  report.critical = solve.roots;
  report.solver_converged = solve.converged;

  const std::vector<Complex> locations = cfg.charges.locations();
  report.hull = convex_hull(locations);

  const double guard = pole_guard_radius(cfg.charges);
  report.contained = true;
  report.worst_signed_distance = -std::numeric_limits<double>::infinity();
  for (const RootEntry& e : report.critical.entries()) {
    CriticalPointCheck check;
    check.location = e.location;
    check.multiplicity = e.multiplicity;
    const double sd = signed_distance(report.hull, e.location);
    report.worst_signed_distance = std::max(report.worst_signed_distance, sd);
    check.contained = sd <= eps;
    for (const RootEntry& charge : cfg.charges.entries()) {
      if (std::abs(e.location - charge.location) <= guard) {
        check.at_charge = true;  // root of P' at a repeated root of P
        break;
      }
    }
    if (!check.at_charge) {
      const FieldVector f = field(cfg, e.location);
      check.field_magnitude = std::hypot(f.ex, f.ey);
      report.max_field_at_critical = std::max(report.max_field_at_critical, check.field_magnitude);
    }
    if (!check.contained) {
      report.contained = false;
      check.witness = separating_direction(report.hull, e.location, eps);
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

double default_containment_eps(const Hull& h, double rel) {
  const double d = diameter(h);
  return rel * (d > 0.0 ? d : 1.0);
}

}  // namespace gll
