#pragma once

#include <stdexcept>

#include "gll/complex_poly.hpp"

namespace gll {

struct SolverConfig {
  double tol = 1e-12;           ///< residual target, relative to residual_scale
  int max_iter = 200;           ///< simultaneous-iteration sweeps
  double cluster_radius = 1e-7; ///< multiplicity clustering radius, relative to the Cauchy bound
};

struct SolveReport {
  RootSet roots;
  int iterations = 0;
  double max_residual = 0.0; ///< largest |p(root)| over the returned roots
  bool converged = true;
};

/// Solver gave up with residual above target; partial results attached.
struct NonConvergence : std::runtime_error {
  NonConvergence(const std::string& what, SolveReport partial_report)
      : std::runtime_error(what), partial(std::move(partial_report)) {}
  SolveReport partial;
};

/// 1 + max_{i<n} |c_i| / |c_n|; all roots lie within this radius.
double cauchy_bound(const Polynomial& p);

/// Residual normalization: max coefficient magnitude * max(1, cauchy_bound)^deg.
double residual_scale(const Polynomial& p);

/// All roots of p with multiplicities, by Aberth-Ehrlich simultaneous
/// iteration with post-hoc clustering. Never throws on non-convergence;
/// inspect report.converged.
SolveReport find_roots(const Polynomial& p, const SolverConfig& cfg = {});

/// Newton-polish z0 while the residual keeps decreasing. Throws
/// StalledAtCriticalPoint when p' vanishes at an iterate.
Complex refine_root(const Polynomial& p, Complex z0);

}  // namespace gll
