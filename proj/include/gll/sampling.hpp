#pragma once

#include <array>
#include <random>

#include "gll/complex_poly.hpp"

namespace gll {

/// Uniform double in [0, 1) from the top 53 bits of the generator output;
/// avoids the implementation-defined std::uniform_real_distribution so that
/// seeded runs reproduce bit-for-bit everywhere.
double uniform01(std::mt19937_64& rng);

/// Uniform point in the disk |z| <= radius (rejection from the square).
Complex uniform_in_disk(std::mt19937_64& rng, double radius);

/// Simple roots drawn uniformly from the radius disk with pairwise
/// separation at least min_sep.
RootSet random_simple_roots(std::mt19937_64& rng, int degree, double radius = 2.0,
                            double min_sep = 1e-2);

/// Random triangle in the radius disk with area at least min_area.
std::array<Complex, 3> random_triangle(std::mt19937_64& rng, double radius = 2.0,
                                       double min_area = 5e-2);

}  // namespace gll
