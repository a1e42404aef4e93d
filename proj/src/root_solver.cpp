#include "gll/root_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "gll/errors.hpp"

namespace gll {

namespace {

constexpr double kMoveTolFactor = 1e-14;   // per-sweep movement threshold, relative to Cauchy bound
constexpr double kInitRadiusFactor = 0.9;  // starting circle radius, relative to Cauchy bound
constexpr double kInitAngleOffset = 0.4;   // breaks symmetry for polynomials like z^n - 1

void require_solvable(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 1) {
    throw std::invalid_argument("root solver requires a non-constant polynomial");
  }
  if (p.degree() > kMaxDegree) {
    throw std::invalid_argument("root solver: degree exceeds cap");
  }
}

// Durand-Kerner correction p(z_i) / (c_n * prod_{j!=i} (z_i - z_j)).
Complex durand_kerner_step(const Polynomial& p, const std::vector<Complex>& pts, std::size_t i,
                           Complex pv) {
  Complex denom = p.leading();
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (j != i) denom *= pts[i] - pts[j];
  }
  if (denom == Complex{0.0, 0.0}) return Complex{0.0, 0.0};
  return pv / denom;
}

// Single-linkage clustering of the converged points into roots with
// multiplicities. Cluster centroid is reported as the root.
RootSet cluster_points(const std::vector<Complex>& pts, double radius) {
  const std::size_t n = pts.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(pts[i] - pts[j]) <= radius) parent[find(i)] = find(j);
    }
  }
  std::vector<RootEntry> entries;
  for (std::size_t rep = 0; rep < n; ++rep) {
    if (find(rep) != rep) continue;
    Complex centroid{0.0, 0.0};
    int count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (find(i) == rep) {
        centroid += pts[i];
        ++count;
      }
    }
    entries.push_back({centroid / static_cast<double>(count), count});
  }
  std::sort(entries.begin(), entries.end(), [](const RootEntry& a, const RootEntry& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  return RootSet(std::move(entries));
}

}  // namespace

double cauchy_bound(const Polynomial& p) {
  if (p.is_zero() || p.degree() < 1) {
    throw std::invalid_argument("cauchy_bound requires a non-constant polynomial");
  }
  const auto& c = p.coeffs();
  const double lead = std::abs(c.back());
  double top = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) top = std::max(top, std::abs(c[i]));
  return 1.0 + top / lead;
}

double residual_scale(const Polynomial& p) {
  double maxc = 0.0;
  for (Complex c : p.coeffs()) maxc = std::max(maxc, std::abs(c));
  if (p.degree() < 1) return maxc;  // bound^0 = 1 either way
  return maxc * std::pow(std::max(1.0, cauchy_bound(p)), p.degree());
}

SolveReport find_roots(const Polynomial& p, const SolverConfig& cfg) {
  require_solvable(p);
  if (cfg.tol <= 0.0 || cfg.cluster_radius <= 0.0 || cfg.max_iter < 1) {
    throw std::invalid_argument("find_roots: invalid SolverConfig");
  }

  const int deg = p.degree();
  const double bound = cauchy_bound(p);
  const double target = cfg.tol * residual_scale(p);
  const double move_tol = kMoveTolFactor * bound;
  const double cluster_abs = cfg.cluster_radius * bound;
  const Polynomial dp = derivative(p);

  std::vector<Complex> pts(deg);
  for (int k = 0; k < deg; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / deg + kInitAngleOffset;
    pts[k] = std::polar(kInitRadiusFactor * bound, angle);
  }

  int sweeps = 0;
  double max_point_residual = 0.0;
  for (; sweeps < cfg.max_iter; ++sweeps) {
    double moved = 0.0;
    for (int i = 0; i < deg; ++i) {
      const Complex pv = evaluate(p, pts[i]);
      if (pv == Complex{0.0, 0.0}) continue;
      const Complex dv = evaluate(dp, pts[i]);
      Complex delta;
      if (dv == Complex{0.0, 0.0}) {
        delta = durand_kerner_step(p, pts, i, pv);
      } else {
        const Complex newton = pv / dv;
        Complex repulsion{0.0, 0.0};
        for (int j = 0; j < deg; ++j) {
          if (j == i) continue;
          const Complex d = pts[i] - pts[j];
          if (d == Complex{0.0, 0.0}) continue;
          repulsion += 1.0 / d;
        }
        const Complex denom = 1.0 - newton * repulsion;
        delta = std::abs(denom) < 1e-290 ? durand_kerner_step(p, pts, i, pv)
                                         : newton / denom;
      }
      pts[i] -= delta;
      moved = std::max(moved, std::abs(delta));
    }

    max_point_residual = 0.0;
    for (int i = 0; i < deg; ++i) {
      max_point_residual = std::max(max_point_residual, std::abs(evaluate(p, pts[i])));
    }
    if (moved < move_tol) {
      ++sweeps;
      break;
    }
    // Residual-based early exit waits until points are also settled on the
    // cluster scale, so multiple roots are still merged correctly.
    if (max_point_residual <= target && moved < 0.01 * cluster_abs) {
      ++sweeps;
      break;
    }
  }

  SolveReport report;
  report.roots = cluster_points(pts, cluster_abs);
  report.iterations = sweeps;
  report.max_residual = 0.0;
  for (const RootEntry& e : report.roots.entries()) {
    report.max_residual = std::max(report.max_residual, std::abs(evaluate(p, e.location)));
  }
  report.converged = report.max_residual <= target;
  return report;
}

Complex refine_root(const Polynomial& p, Complex z0) {
  require_solvable(p);
  const Polynomial dp = derivative(p);
  const double dscale = residual_scale(dp);

  Complex z = z0;
  double best = std::abs(evaluate(p, z));
  for (int step = 0; step < 64; ++step) {
    const Complex dv = evaluate(dp, z);
    if (std::abs(dv) <= kPoleGuardFactor * dscale) {
      throw StalledAtCriticalPoint("refine_root: derivative vanishes at iterate");
    }
    const Complex next = z - evaluate(p, z) / dv;
    const double residual = std::abs(evaluate(p, next));
    if (residual >= best) break;
    z = next;
    best = residual;
  }
  return z;
}

}  // namespace gll
