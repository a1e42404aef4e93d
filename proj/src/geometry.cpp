#include "gll/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gll/errors.hpp"

namespace gll {

namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

double distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

Complex closest_point_on_segment(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return a;
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return a + t * ab;
}

}  // namespace

Hull convex_hull(std::span<const Complex> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull requires at least one point");

  std::vector<Complex> pts(points.begin(), points.end());
  auto lex_less = [](Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  };
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  const std::size_t n = pts.size();
  if (n <= 2) return Hull(std::move(pts));

  // Monotone chain; popping on cross <= 0 drops collinear boundary points.
  std::vector<Complex> chain(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(chain[k - 2], chain[k - 1], pts[i]) <= 0.0) --k;
    chain[k++] = pts[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(chain[k - 2], chain[k - 1], pts[i]) <= 0.0) --k;
    chain[k++] = pts[i];
  }
  chain.resize(k - 1);  // last point repeats the first
  return Hull(std::move(chain));
}

double signed_distance(const Hull& h, Complex p) {
  const auto& v = h.vertices();
  if (v.empty()) throw std::invalid_argument("signed_distance on empty hull");
  if (v.size() == 1) return std::abs(p - v[0]);
  if (v.size() == 2) return distance_to_segment(p, v[0], v[1]);

  bool inside = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (cross(v[i], v[(i + 1) % v.size()], p) < 0.0) {
      inside = false;
      break;
    }
  }
  double boundary = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    boundary = std::min(boundary, distance_to_segment(p, v[i], v[(i + 1) % v.size()]));
  }
  return inside ? -boundary : boundary;
}

bool contains(const Hull& h, Complex p, double eps) {
  if (eps < 0.0) throw std::invalid_argument("contains: eps must be >= 0");
  return signed_distance(h, p) <= eps;
}

Witness separating_direction(const Hull& h, Complex z, double eps) {
  if (contains(h, z, eps)) {
    throw NotSeparable("separating_direction: point is eps-contained in the hull");
  }
  const auto& v = h.vertices();
  Complex closest = v[0];
  double best = std::abs(z - v[0]);
  if (v.size() >= 2) {
    const std::size_t edges = v.size() == 2 ? 1 : v.size();
    for (std::size_t i = 0; i < edges; ++i) {
      const Complex q = closest_point_on_segment(z, v[i], v[(i + 1) % v.size()]);
      const double d = std::abs(z - q);
      if (d < best) {
        best = d;
        closest = q;
      }
    }
  }
  Witness w;
  w.direction = (z - closest) / std::abs(z - closest);
  w.margin = std::numeric_limits<double>::infinity();
  for (Complex a : v) w.margin = std::min(w.margin, dot(z - a, w.direction));
  return w;
}

double diameter(const Hull& h) {
  const auto& v = h.vertices();
  double best = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      best = std::max(best, std::abs(v[i] - v[j]));
    }
  }
  return best;
}

}  // namespace gll
