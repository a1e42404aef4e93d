#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gll/electrostatics.hpp"
#include "gll/errors.hpp"
#include "gll/geometry.hpp"
#include "gll/sampling.hpp"
#include "support/oracles.hpp"

using gll::Complex;
using gll::Hull;
using gll::Witness;
using oracles::close;

namespace {

const Complex I{0.0, 1.0};

std::vector<Complex> pts(std::initializer_list<Complex> list) { return {list}; }

bool same_vertex_set(const Hull& a, const std::vector<Complex>& expected, double atol) {
  if (a.vertices().size() != expected.size()) return false;
  return oracles::multisets_match(expected, a.vertices(), atol);
}

}  // namespace

TEST_CASE("convex hull of simple configurations") {
  const Hull tri = gll::convex_hull(pts({0.0, 1.0, I}));
  CHECK(same_vertex_set(tri, {0.0, 1.0, I}, 0.0));

  const Hull square = gll::convex_hull(pts({0.0, 1.0, 1.0 + I, I, Complex{0.5, 0.5}}));
  CHECK(same_vertex_set(square, {0.0, 1.0, 1.0 + I, I}, 0.0));

  const Hull segment = gll::convex_hull(pts({0.0, 1.0, 2.0}));
  REQUIRE(segment.size() == 2);
  CHECK(same_vertex_set(segment, {0.0, 2.0}, 0.0));

  const Hull point = gll::convex_hull(pts({Complex{0.5, -0.25}}));
  CHECK(point.size() == 1);
}

TEST_CASE("hull vertices are counter-clockwise") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Complex> cloud;
    const int n = 3 + static_cast<int>(gll::uniform01(rng) * 30);
    for (int i = 0; i < n; ++i) cloud.push_back(gll::uniform_in_disk(rng, 2.0));
    const Hull h = gll::convex_hull(cloud);
    if (h.size() < 3) continue;
    const auto& v = h.vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Complex a = v[i];
      const Complex b = v[(i + 1) % v.size()];
      const Complex c = v[(i + 2) % v.size()];
      const double cross = (b.real() - a.real()) * (c.imag() - a.imag()) -
                           (b.imag() - a.imag()) * (c.real() - a.real());
      CHECK(cross > 0.0);  // strictly convex: no collinear triples survive
    }
  }
}

TEST_CASE("hull is idempotent and contains its inputs") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Complex> cloud;
    const int n = 1 + static_cast<int>(gll::uniform01(rng) * 40);
    for (int i = 0; i < n; ++i) cloud.push_back(gll::uniform_in_disk(rng, 2.0));
    const Hull h = gll::convex_hull(cloud);
    const Hull again = gll::convex_hull(h.vertices());
    CHECK(same_vertex_set(again, h.vertices(), 0.0));
    const double eps = 1e-12 * std::max(1.0, gll::diameter(h));
    for (Complex p : cloud) CHECK(gll::contains(h, p, eps));
  }
}

TEST_CASE("containment on fixed shapes") {
  const Hull tri = gll::convex_hull(pts({0.0, 1.0, I}));
  CHECK(gll::contains(tri, (1.0 + I) / 3.0, 0.0));
  CHECK_FALSE(gll::contains(tri, Complex{5.0, 0.0}, 0.0));
  const Hull seg = gll::convex_hull(pts({0.0, 2.0}));
  CHECK(gll::contains(seg, 1.0, 0.0));
  CHECK_FALSE(gll::contains(seg, 1.0 + 0.5 * I, 0.25));
  CHECK(gll::contains(seg, 1.0 + 0.5 * I, 0.5));
  CHECK_THROWS_AS(gll::contains(seg, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("separating direction on fixed shapes") {
  const Hull seg = gll::convex_hull(pts({-1.0, 1.0}));
  const Witness w = gll::separating_direction(seg, 2.0, 0.0);
  CHECK(close(w.direction, 1.0, 1e-15));
  CHECK(close(w.margin, 1.0, 1e-15));

  const Hull tri = gll::convex_hull(pts({0.0, 1.0, I}));
  const Witness w2 = gll::separating_direction(tri, -1.0, 0.0);
  CHECK(close(w2.direction, -1.0, 1e-15));
  CHECK(close(w2.margin, 1.0, 1e-15));

  CHECK_THROWS_AS(gll::separating_direction(tri, (1.0 + I) / 3.0, 1e-9), gll::NotSeparable);
}

TEST_CASE("witnesses are sound and satisfy the field inequality") {
  std::mt19937_64 rng(8);
  int exercised = 0;
  while (exercised < 200) {
    const int n = 2 + static_cast<int>(gll::uniform01(rng) * 10);
    const gll::RootSet roots = gll::random_simple_roots(rng, n, 1.5, 1e-2);
    const std::vector<Complex> locs = roots.locations();
    const Hull h = gll::convex_hull(locs);
    const Complex z = gll::uniform_in_disk(rng, 4.0);
    const double eps = 1e-12 * std::max(1.0, gll::diameter(h));
    if (gll::contains(h, z, eps)) continue;
    ++exercised;

    const Witness w = gll::separating_direction(h, z, eps);
    CHECK(close(std::abs(w.direction), 1.0, 1e-12));
    CHECK(w.margin > 0.0);
    for (Complex a : locs) {
      const Complex d = z - a;
      const double dot = d.real() * w.direction.real() + d.imag() * w.direction.imag();
      CHECK(dot >= w.margin - 1e-12 * std::max(1.0, std::abs(d)));
    }

    // The proof's step: E(z) . v > 0, so the field cannot vanish outside.
    const gll::ChargeConfiguration cfg{roots};
    const gll::FieldVector field = gll::field(cfg, z);
    CHECK(field.ex * w.direction.real() + field.ey * w.direction.imag() > 0.0);
  }
}

TEST_CASE("hulls are rotation-equivariant") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> cloud;
    const int n = 3 + static_cast<int>(gll::uniform01(rng) * 20);
    for (int i = 0; i < n; ++i) cloud.push_back(gll::uniform_in_disk(rng, 2.0));
    const Complex rot = std::polar(1.0, 2.0 * M_PI * gll::uniform01(rng));
    std::vector<Complex> rotated;
    for (Complex p : cloud) rotated.push_back(rot * p);
    const Hull h = gll::convex_hull(cloud);
    std::vector<Complex> expected;
    for (Complex v : h.vertices()) expected.push_back(rot * v);
    const Hull hr = gll::convex_hull(rotated);
    CHECK(oracles::multisets_match(expected, hr.vertices(), 1e-12));
  }
}

TEST_CASE("diameter") {
  CHECK(gll::diameter(gll::convex_hull(pts({0.0, 2.0}))) == 2.0);
  CHECK(close(gll::diameter(gll::convex_hull(pts({0.0, 1.0, 1.0 + I, I}))), std::sqrt(2.0),
              1e-15));
  CHECK(gll::diameter(gll::convex_hull(pts({1.0}))) == 0.0);
}
