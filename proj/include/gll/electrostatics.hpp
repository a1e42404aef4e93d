#pragma once

#include <optional>
#include <vector>

#include "gll/complex_poly.hpp"
#include "gll/geometry.hpp"
#include "gll/root_solver.hpp"

namespace gll {

/// Unit charges at polynomial roots; a root of multiplicity m carries
/// integer charge m, which keeps the roots-of-P' = field-zeros identity exact.
struct ChargeConfiguration {
  RootSet charges;

  explicit ChargeConfiguration(RootSet rs);
  int total_charge() const { return charges.total_multiplicity(); }
};

struct FieldVector {
  double ex = 0.0;
  double ey = 0.0;
};

/// phi(z) = -(1/2pi) sum m_i ln|z - a_i|. Throws PoleError at a charge.
double potential(const ChargeConfiguration& cfg, Complex z);

/// E(z) = (1/2pi) sum m_i (z - a_i)/|z - a_i|^2. Throws PoleError at a charge.
FieldVector field(const ChargeConfiguration& cfg, Complex z);

/// Same field read off the conjugated logarithmic derivative,
/// (1/2pi) conj(P'/P); agrees with field() up to roundoff.
FieldVector field_via_log_derivative(const ChargeConfiguration& cfg, Complex z);

/// Roots of P' for P = from_roots(charges), with multiplicities. Partial
/// data is preserved in the report when the solver does not converge.
SolveReport solve_critical_points(const ChargeConfiguration& cfg, const SolverConfig& solver = {});

/// Convenience wrapper over solve_critical_points; throws NonConvergence.
RootSet critical_points(const ChargeConfiguration& cfg, const SolverConfig& solver = {});

/// Per-critical-point verdicts for the containment report.
struct CriticalPointCheck {
  Complex location;
  int multiplicity = 1;
  bool contained = false;
  /// Set when the point sits at a charge (repeated-root case); the field has
  /// a pole there and the magnitude check is skipped.
  bool at_charge = false;
  double field_magnitude = 0.0;
  std::optional<Witness> witness;  ///< only for points found outside
};

struct GaussLucasReport {
  RootSet critical;
  Hull hull;
  std::vector<CriticalPointCheck> checks;
  bool contained = false;               ///< all critical points eps-contained
  double max_field_at_critical = 0.0;   ///< over points away from charges
  double eps = 0.0;                     ///< absolute containment tolerance used
  bool solver_converged = true;
  double worst_signed_distance = 0.0;   ///< max signed hull distance over critical points
};

/// Composite check of the theorem: critical points, hull containment with
/// eps slack, field magnitude at each critical point, and a separating
/// witness for any point found outside.
GaussLucasReport gauss_lucas_report(const ChargeConfiguration& cfg, const SolverConfig& solver,
                                    double eps);

/// Containment tolerance used by the CLI: rel * hull diameter, with the
/// single-point diameter clamped to 1.
double default_containment_eps(const Hull& h, double rel = 1e-9);

}  // namespace gll
