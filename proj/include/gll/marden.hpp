#pragma once

#include "gll/complex_poly.hpp"

namespace gll {

/// Ellipse carried by its foci and semi-major length; the representation the
/// distance-sum characterization |p-f1| + |p-f2| = 2a works on directly.
struct Ellipse {
  Complex focus1;
  Complex focus2;
  double semi_major = 0.0;

  Complex center() const { return 0.5 * (focus1 + focus2); }
  double focal_half_distance() const { return 0.5 * std::abs(focus1 - focus2); }
  double semi_minor() const;
};

/// Steiner inellipse of the triangle abc: foci at the roots of P' for
/// P = (z-a)(z-b)(z-c), sized through the midpoint of side ab. Throws
/// DegenerateTriangle for (numerically) collinear vertices.
Ellipse steiner_inellipse(Complex a, Complex b, Complex c);

/// True iff | |p-f1| + |p-f2| - 2a | <= tol.
bool on_boundary(const Ellipse& e, Complex p, double tol);

/// True iff the distance-sum minimum over the segment equals 2a within tol
/// and the minimizer is the segment midpoint within tol * side length, i.e.
/// the side touches the ellipse exactly at its midpoint.
bool tangency_check(const Ellipse& e, Complex side_start, Complex side_end, double tol);

double ellipse_area(const Ellipse& e);

}  // namespace gll
