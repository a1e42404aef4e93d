#include "gll/complex_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gll/errors.hpp"

namespace gll {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

RootSet::RootSet(std::vector<RootEntry> entries) {
  entries_.reserve(entries.size());
  for (const RootEntry& e : entries) {
    if (!is_finite(e.location)) {
      throw std::invalid_argument("RootSet: root location must be finite");
    }
    if (e.multiplicity < 1) {
      throw std::invalid_argument("RootSet: multiplicity must be >= 1");
    }
    auto it = std::find_if(entries_.begin(), entries_.end(), [&](const RootEntry& seen) {
      return seen.location == e.location;
    });
    if (it != entries_.end()) {
      it->multiplicity += e.multiplicity;
    } else {
      entries_.push_back(e);
    }
  }
}

RootSet RootSet::from_points(std::span<const Complex> points) {
  std::vector<RootEntry> entries;
  entries.reserve(points.size());
  for (Complex p : points) entries.push_back({p, 1});
  return RootSet(std::move(entries));
}

int RootSet::total_multiplicity() const {
  int total = 0;
  for (const RootEntry& e : entries_) total += e.multiplicity;
  return total;
}

std::vector<Complex> RootSet::locations() const {
  std::vector<Complex> locs;
  locs.reserve(entries_.size());
  for (const RootEntry& e : entries_) locs.push_back(e.location);
  return locs;
}

double RootSet::extent() const {
  if (entries_.empty()) return 1.0;
  double xlo = entries_[0].location.real(), xhi = xlo;
  double ylo = entries_[0].location.imag(), yhi = ylo;
  for (const RootEntry& e : entries_) {
    xlo = std::min(xlo, e.location.real());
    xhi = std::max(xhi, e.location.real());
    ylo = std::min(ylo, e.location.imag());
    yhi = std::max(yhi, e.location.imag());
  }
  return std::max(1.0, std::hypot(xhi - xlo, yhi - ylo));
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("Polynomial: coefficient vector must be nonempty");
  }
  for (Complex c : coeffs_) {
    if (!is_finite(c)) throw std::invalid_argument("Polynomial: coefficients must be finite");
  }
  while (coeffs_.size() > 1 && coeffs_.back() == Complex{0.0, 0.0}) coeffs_.pop_back();
}

bool Polynomial::is_zero() const {
  return coeffs_.size() == 1 && coeffs_[0] == Complex{0.0, 0.0};
}

Polynomial from_roots(const RootSet& roots) {
  if (roots.total_multiplicity() > kMaxDegree) {
    throw std::invalid_argument("from_roots: total multiplicity exceeds degree cap");
  }
  std::vector<Complex> coeffs{Complex{1.0, 0.0}};
  for (const RootEntry& e : roots.entries()) {
    for (int k = 0; k < e.multiplicity; ++k) {
      // Convolve with the linear factor (z - a): shift up, subtract a*coeffs.
      coeffs.push_back(coeffs.back());
      for (std::size_t i = coeffs.size() - 2; i > 0; --i) {
        coeffs[i] = coeffs[i - 1] - e.location * coeffs[i];
      }
      coeffs[0] = -e.location * coeffs[0];
    }
  }
  return Polynomial(std::move(coeffs));
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() == 0) return Polynomial();
  std::vector<Complex> dcoeffs(p.degree());
  for (int i = 1; i <= p.degree(); ++i) {
    dcoeffs[i - 1] = static_cast<double>(i) * p.coeffs()[i];
  }
  return Polynomial(std::move(dcoeffs));
}

Complex evaluate(const Polynomial& p, Complex z) {
  const auto& c = p.coeffs();
  Complex acc = c.back();
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double pole_guard_radius(const RootSet& roots) { return kPoleGuardFactor * roots.extent(); }

Complex log_derivative(const RootSet& roots, Complex z) {
  const double guard = pole_guard_radius(roots);
  Complex sum{0.0, 0.0};
  for (const RootEntry& e : roots.entries()) {
    const Complex d = z - e.location;
    if (std::abs(d) <= guard) {
      throw PoleError("log_derivative: z is at (or within the pole guard of) a root");
    }
    sum += static_cast<double>(e.multiplicity) / d;
  }
  return sum;
}

}  // namespace gll
