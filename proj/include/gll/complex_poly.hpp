#pragma once

#include <complex>
#include <span>
#include <vector>

namespace gll {

using Complex = std::complex<double>;

/// One distinct root location with its repetition count. Multiplicity
/// doubles as an integer charge in the electrostatic picture.
struct RootEntry {
  Complex location;
  int multiplicity = 1;
};

/// Root locations with multiplicities. Entries with bitwise-equal locations
/// are merged on construction by summing multiplicities; all components must
/// be finite and multiplicities positive.
class RootSet {
 public:
  RootSet() = default;
  explicit RootSet(std::vector<RootEntry> entries);
  static RootSet from_points(std::span<const Complex> points);

  const std::vector<RootEntry>& entries() const& { return entries_; }
  std::vector<RootEntry> entries() && { return std::move(entries_); }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  int total_multiplicity() const;
  std::vector<Complex> locations() const;

  /// Bounding-box diagonal of the locations, clamped below by 1. Relative
  /// scale for the pole guard.
  double extent() const;

 private:
  std::vector<RootEntry> entries_;
};

/// Dense univariate polynomial; index i holds the coefficient of degree i.
/// Trailing zero coefficients are trimmed, so the leading coefficient is
/// nonzero except for the zero polynomial, which is the single coefficient 0.
class Polynomial {
 public:
  Polynomial() : coeffs_{Complex{0.0, 0.0}} {}
  explicit Polynomial(std::vector<Complex> coeffs);

  const std::vector<Complex>& coeffs() const& { return coeffs_; }
  std::vector<Complex> coeffs() && { return std::move(coeffs_); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const;
  Complex leading() const { return coeffs_.back(); }

 private:
  std::vector<Complex> coeffs_;
};

/// Degree cap for from_roots and the root solver.
inline constexpr int kMaxDegree = 64;

/// Pole guard radius = kPoleGuardFactor * RootSet::extent().
inline constexpr double kPoleGuardFactor = 1e-14;

/// Monic polynomial with exactly the given roots, expanded by repeated
/// linear-factor convolution in input order. Empty set gives the constant 1.
Polynomial from_roots(const RootSet& roots);

Polynomial derivative(const Polynomial& p);

/// Horner evaluation of p at z.
Complex evaluate(const Polynomial& p, Complex z);

double pole_guard_radius(const RootSet& roots);

/// Sum of m_i / (z - a_i), which is P'/P for P = from_roots(roots).
/// Throws PoleError when z is within the pole guard of a root.
Complex log_derivative(const RootSet& roots, Complex z);

}  // namespace gll
