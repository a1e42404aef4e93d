#pragma once

#include <span>
#include <vector>

#include "gll/complex_poly.hpp"

namespace gll {

/// Convex hull as a counter-clockwise vertex list. Degenerate forms are
/// first-class: one vertex is a point, two are a segment.
class Hull {
 public:
  Hull() = default;
  explicit Hull(std::vector<Complex> ccw_vertices) : vertices_(std::move(ccw_vertices)) {}

  const std::vector<Complex>& vertices() const& { return vertices_; }
  std::vector<Complex> vertices() && { return std::move(vertices_); }
  std::size_t size() const { return vertices_.size(); }

 private:
  std::vector<Complex> vertices_;
};

/// Separating direction certificate: unit vector v with (z - a_i) . v >= margin > 0
/// for every hull point a_i.
struct Witness {
  Complex direction;
  double margin = 0.0;
};

/// Monotone-chain hull of the points; collinear boundary points are dropped.
Hull convex_hull(std::span<const Complex> points);

/// Signed distance from p to the hull: positive outside (distance to the
/// boundary), non-positive inside (negated depth). Degenerate hulls give the
/// plain distance to the point/segment.
double signed_distance(const Hull& h, Complex p);

/// True iff p lies within signed distance eps of the hull, boundary inclusive.
bool contains(const Hull& h, Complex p, double eps);

/// Witness for a point outside the hull: v = (z - q)/|z - q| with q the
/// closest hull point. Throws NotSeparable when contains(h, z, eps).
Witness separating_direction(const Hull& h, Complex z, double eps);

/// Max pairwise vertex distance; 0 for a single point.
double diameter(const Hull& h);

}  // namespace gll
