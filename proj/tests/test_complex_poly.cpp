#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gll/complex_poly.hpp"
#include "gll/errors.hpp"
#include "gll/sampling.hpp"
#include "support/oracles.hpp"

using gll::Complex;
using gll::Polynomial;
using gll::RootEntry;
using gll::RootSet;
using oracles::close;

namespace {

const Complex I{0.0, 1.0};

RootSet points(std::initializer_list<Complex> pts) {
  std::vector<RootEntry> entries;
  for (Complex p : pts) entries.push_back({p, 1});
  return RootSet(std::move(entries));
}

bool coeffs_close(const Polynomial& p, const std::vector<Complex>& expected, double atol) {
  if (p.coeffs().size() != expected.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!close(p.coeffs()[i], expected[i], atol)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("from_roots expands linear factors") {
  CHECK(coeffs_close(gll::from_roots(points({1.0, -1.0})), {-1.0, 0.0, 1.0}, 0.0));
  CHECK(coeffs_close(gll::from_roots(RootSet{}), {1.0}, 0.0));
  // Hand expansion: z(z-1)(z-i) = z^3 - (1+i)z^2 + iz.
  CHECK(coeffs_close(gll::from_roots(points({0.0, 1.0, I})), {0.0, I, -(1.0 + I), 1.0}, 1e-15));
}

TEST_CASE("from_roots respects multiplicities and merges duplicates") {
  RootSet repeated({{Complex{1.0, 0.0}, 1}, {Complex{1.0, 0.0}, 1}});
  CHECK(repeated.entries().size() == 1);
  CHECK(repeated.entries()[0].multiplicity == 2);
  // (z-1)^2 = 1 - 2z + z^2
  CHECK(coeffs_close(gll::from_roots(repeated), {1.0, -2.0, 1.0}, 0.0));
}

TEST_CASE("from_roots enforces the degree cap") {
  std::vector<RootEntry> entries{{Complex{0.5, 0.0}, gll::kMaxDegree + 1}};
  CHECK_THROWS_AS(gll::from_roots(RootSet(entries)), std::invalid_argument);
}

TEST_CASE("derivative follows the power rule") {
  CHECK(coeffs_close(gll::derivative(Polynomial({-1.0, 0.0, 1.0})), {0.0, 2.0}, 0.0));
  CHECK(coeffs_close(gll::derivative(Polynomial({5.0})), {0.0}, 0.0));
  CHECK(coeffs_close(gll::derivative(Polynomial({0.0, I, -(1.0 + I), 1.0})),
                     {I, -2.0 * (1.0 + I), 3.0}, 0.0));
}

TEST_CASE("derivative is linear") {
  // Integer coefficients keep the identity exact in floating point.
  std::mt19937_64 rng(7);
  const auto random_int = [&rng] {
    return Complex{std::floor(64.0 * gll::uniform01(rng)) - 32.0,
                   std::floor(64.0 * gll::uniform01(rng)) - 32.0};
  };
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Complex> a, b, sum;
    const int n = 1 + static_cast<int>(gll::uniform01(rng) * 8);
    for (int i = 0; i < n; ++i) {
      a.push_back(random_int());
      b.push_back(random_int());
      sum.push_back(a.back() + b.back());
    }
    const Polynomial da = gll::derivative(Polynomial(a));
    const Polynomial db = gll::derivative(Polynomial(b));
    const Polynomial dsum = gll::derivative(Polynomial(sum));
    for (int i = 0; i < dsum.degree() + 1; ++i) {
      Complex lhs = dsum.coeffs()[i];
      Complex rhs{0.0, 0.0};
      if (i <= da.degree()) rhs += da.coeffs()[i];
      if (i <= db.degree()) rhs += db.coeffs()[i];
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("evaluate uses Horner and is exact on small integer cases") {
  const Polynomial p({-1.0, 0.0, 1.0});  // z^2 - 1
  CHECK(gll::evaluate(p, 2.0) == Complex{3.0, 0.0});
  CHECK(gll::evaluate(p, 1.0) == Complex{0.0, 0.0});
  // Direct repeated multiplication: (1+i)^3 = -2+2i.
  const Complex z{1.0, 1.0};
  const Complex expected = z * z * z;
  CHECK(gll::evaluate(Polynomial({0.0, 0.0, 0.0, 1.0}), z) == expected);
  CHECK(close(expected, Complex{-2.0, 2.0}, 1e-15));
}

TEST_CASE("log_derivative sums simple poles") {
  CHECK(close(gll::log_derivative(points({0.0}), 2.0), 0.5, 0.0));
  CHECK(close(gll::log_derivative(points({1.0, -1.0}), 0.0), 0.0, 0.0));
  const Complex expected = 0.5 + 1.0 + 1.0 / (2.0 - I);
  CHECK(close(gll::log_derivative(points({0.0, 1.0, I}), 2.0), expected, 1e-15));
}

TEST_CASE("log_derivative rejects points inside the pole guard") {
  const RootSet roots = points({0.0, 1.0});
  CHECK_THROWS_AS(gll::log_derivative(roots, Complex{0.0, 0.0}), gll::PoleError);
  CHECK_THROWS_AS(gll::log_derivative(roots, Complex{1e-16, 0.0}), gll::PoleError);
  CHECK_NOTHROW(gll::log_derivative(roots, Complex{1e-10, 0.0}));
}

TEST_CASE("log_derivative matches P'/P away from roots") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = 2 + static_cast<int>(gll::uniform01(rng) * 9);
    const RootSet roots = gll::random_simple_roots(rng, deg, 1.0, 1e-2);
    const Polynomial p = gll::from_roots(roots);
    const Polynomial dp = gll::derivative(p);
    const Complex z = gll::uniform_in_disk(rng, 3.0) + Complex{3.5, 0.0};
    const Complex via_sum = gll::log_derivative(roots, z);
    const Complex via_poly = gll::evaluate(dp, z) / gll::evaluate(p, z);
    CHECK(std::abs(via_sum - via_poly) <= 1e-9 * std::abs(via_sum));
  }
}

TEST_CASE("from_roots round-trips through its own roots") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int deg = 1 + static_cast<int>(gll::uniform01(rng) * 12);
    const RootSet roots = gll::random_simple_roots(rng, deg, 1.0, 1e-2);
    const Polynomial p = gll::from_roots(roots);
    CHECK(p.degree() == deg);
    CHECK(p.leading() == Complex{1.0, 0.0});
    double max_coeff = 0.0;
    for (Complex c : p.coeffs()) max_coeff = std::max(max_coeff, std::abs(c));
    for (const RootEntry& e : roots.entries()) {
      CHECK(std::abs(gll::evaluate(p, e.location)) <= 1e-9 * (1.0 + max_coeff));
    }
  }
}

TEST_CASE("polynomial trims trailing zeros and flags the zero polynomial") {
  const Polynomial trimmed(std::vector<Complex>{1.0, 2.0, 0.0, 0.0});
  CHECK(trimmed.degree() == 1);
  const Polynomial zero(std::vector<Complex>{0.0, 0.0});
  CHECK(zero.is_zero());
  CHECK(zero.degree() == 0);
  CHECK_FALSE(Polynomial(std::vector<Complex>{5.0}).is_zero());
}

TEST_CASE("root set validation") {
  CHECK_THROWS_AS(RootSet({{Complex{0.0, 0.0}, 0}}), std::invalid_argument);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(RootSet({{Complex{inf, 0.0}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial(std::vector<Complex>{}), std::invalid_argument);
}
