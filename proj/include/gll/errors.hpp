#pragma once

#include <stdexcept>
#include <string>

namespace gll {

/// Evaluation was requested within the pole guard of a charge/root.
struct PoleError : std::domain_error {
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// Newton refinement hit a point where the derivative vanishes.
struct StalledAtCriticalPoint : std::runtime_error {
  explicit StalledAtCriticalPoint(const std::string& what) : std::runtime_error(what) {}
};

/// Triangle vertices are (numerically) collinear.
struct DegenerateTriangle : std::invalid_argument {
  explicit DegenerateTriangle(const std::string& what) : std::invalid_argument(what) {}
};

/// separating_direction called on a point the hull contains.
struct NotSeparable : std::logic_error {
  explicit NotSeparable(const std::string& what) : std::logic_error(what) {}
};

/// Not enough unmasked grid samples to pick strictly increasing levels.
struct TooFewSamples : std::invalid_argument {
  explicit TooFewSamples(const std::string& what) : std::invalid_argument(what) {}
};

/// Output file could not be written.
struct IoFailure : std::runtime_error {
  explicit IoFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gll
