#include "gll/sampling.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace gll {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex uniform_in_disk(std::mt19937_64& rng, double radius) {
  while (true) {
    const double x = 2.0 * uniform01(rng) - 1.0;
    const double y = 2.0 * uniform01(rng) - 1.0;
    if (x * x + y * y <= 1.0) return {radius * x, radius * y};
  }
}

RootSet random_simple_roots(std::mt19937_64& rng, int degree, double radius, double min_sep) {
  if (degree < 1 || degree > kMaxDegree) {
    throw std::invalid_argument("random_simple_roots: degree out of range");
  }
  std::vector<RootEntry> entries;
  entries.reserve(degree);
  while (static_cast<int>(entries.size()) < degree) {
    const Complex candidate = uniform_in_disk(rng, radius);
    bool separated = true;
    for (const RootEntry& e : entries) {
      if (std::abs(candidate - e.location) < min_sep) {
        separated = false;
        break;
      }
    }
    if (separated) entries.push_back({candidate, 1});
  }
  return RootSet(std::move(entries));
}

std::array<Complex, 3> random_triangle(std::mt19937_64& rng, double radius, double min_area) {
  while (true) {
    const Complex a = uniform_in_disk(rng, radius);
    const Complex b = uniform_in_disk(rng, radius);
    const Complex c = uniform_in_disk(rng, radius);
    const Complex ab = b - a;
    const Complex ac = c - a;
    const double area = 0.5 * std::abs(ab.real() * ac.imag() - ab.imag() * ac.real());
    if (area >= min_area) return {a, b, c};
  }
}

}  // namespace gll
