#include "gll/marden.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gll/errors.hpp"

namespace gll {

namespace {

double distance_sum(const Ellipse& e, Complex p) {
  return std::abs(p - e.focus1) + std::abs(p - e.focus2);
}

// Derivative of the distance sum along the segment direction u (unit-free;
// only its sign matters for locating the minimum).
double distance_sum_slope(const Ellipse& e, Complex p, Complex u) {
  const Complex d1 = p - e.focus1;
  const Complex d2 = p - e.focus2;
  const double n1 = std::abs(d1);
  const double n2 = std::abs(d2);
  double slope = 0.0;
  if (n1 > 0.0) slope += (u.real() * d1.real() + u.imag() * d1.imag()) / n1;
  if (n2 > 0.0) slope += (u.real() * d2.real() + u.imag() * d2.imag()) / n2;
  return slope;
}

}  // namespace

double Ellipse::semi_minor() const {
  const double c = focal_half_distance();
  return std::sqrt(std::max(0.0, semi_major * semi_major - c * c));
}

Ellipse steiner_inellipse(Complex a, Complex b, Complex c) {
  const double scale = std::max({std::abs(a - b), std::abs(b - c), std::abs(c - a)});
  const Complex ab = b - a;
  const Complex ac = c - a;
  const double area = 0.5 * std::abs(ab.real() * ac.imag() - ab.imag() * ac.real());
  if (area <= 1e-12 * scale * scale) {
    throw DegenerateTriangle("steiner_inellipse: vertices are collinear");
  }

  // Foci are the roots of 3z^2 - 2(a+b+c)z + (ab+bc+ca).
  const Complex B = -2.0 * (a + b + c);
  const Complex C = a * b + b * c + c * a;
  const Complex sq = std::sqrt(B * B - 12.0 * C);
  const Complex q = (std::conj(B) * sq).real() >= 0.0 ? -0.5 * (B + sq) : -0.5 * (B - sq);

  Ellipse e;
  if (q == Complex{0.0, 0.0}) {
    e.focus1 = e.focus2 = Complex{0.0, 0.0};
  } else {
    e.focus1 = q / 3.0;
    e.focus2 = C / q;
  }

  // Foci plus one boundary point pin the ellipse; the side midpoint is on it.
  const Complex mid = 0.5 * (a + b);
  e.semi_major = 0.5 * distance_sum(e, mid);
  return e;
}

bool on_boundary(const Ellipse& e, Complex p, double tol) {
  return std::abs(distance_sum(e, p) - 2.0 * e.semi_major) <= tol;
}

bool tangency_check(const Ellipse& e, Complex side_start, Complex side_end, double tol) {
  const Complex u = side_end - side_start;
  const double side_len = std::abs(u);
  if (side_len == 0.0) return false;
  auto at = [&](double t) { return side_start + t * u; };

  // Golden-section bracket of the distance-sum minimum along the side.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0, hi = 1.0;
  double t1 = hi - inv_phi * (hi - lo);
  double t2 = lo + inv_phi * (hi - lo);
  double f1 = distance_sum(e, at(t1));
  double f2 = distance_sum(e, at(t2));
  while (hi - lo > 1e-12) {
    if (f1 <= f2) {
      hi = t2;
      t2 = t1;
      f2 = f1;
      t1 = hi - inv_phi * (hi - lo);
      f1 = distance_sum(e, at(t1));
    } else {
      lo = t1;
      t1 = t2;
      f1 = f2;
      t2 = lo + inv_phi * (hi - lo);
      f2 = distance_sum(e, at(t2));
    }
  }
  double t_min = 0.5 * (lo + hi);

  // The distance sum is flat near its minimum, so the golden bracket can sit
  // anywhere in the roundoff plateau. Polish by bisecting the slope, which
  // crosses zero sharply at the true minimizer.
  {
    double a = std::max(0.0, t_min - 1e-4);
    double b = std::min(1.0, t_min + 1e-4);
    double ga = distance_sum_slope(e, at(a), u);
    double gb = distance_sum_slope(e, at(b), u);
    if (ga < 0.0 && gb > 0.0) {
      for (int i = 0; i < 80; ++i) {
        const double m = 0.5 * (a + b);
        const double gm = distance_sum_slope(e, at(m), u);
        if (gm < 0.0) {
          a = m;
        } else {
          b = m;
        }
      }
      t_min = 0.5 * (a + b);
    }
  }

  const Complex p_min = at(t_min);
  const double value_gap = std::abs(distance_sum(e, p_min) - 2.0 * e.semi_major);
  const double midpoint_gap = std::abs(p_min - 0.5 * (side_start + side_end));
  return value_gap <= tol && midpoint_gap <= tol * side_len;
}

double ellipse_area(const Ellipse& e) {
  return std::numbers::pi * e.semi_major * e.semi_minor();
}

}  // namespace gll
