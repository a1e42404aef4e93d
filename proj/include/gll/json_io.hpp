#pragma once

#include <nlohmann/json.hpp>

#include "gll/complex_poly.hpp"
#include "gll/electrostatics.hpp"
#include "gll/geometry.hpp"
#include "gll/marden.hpp"
#include "gll/root_solver.hpp"

namespace gll {

using Json = nlohmann::json;

// RootSet wire format, used repo-wide: [[re, im, mult], ...]; mult optional
// on input (default 1). Entries with equal locations merge on decode.
Json to_json(const RootSet& roots);
RootSet root_set_from_json(const Json& j);

// Polynomial: [[re, im], ...], low degree first.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// SolveReport: {roots, iterations, max_residual, converged}.
Json to_json(const SolveReport& report);

// Hull: [[re, im], ...] counter-clockwise.
Json to_json(const Hull& h);

// Ellipse: {f1: [re, im], f2: [re, im], a: real}.
Json to_json(const Ellipse& e);
Ellipse ellipse_from_json(const Json& j);

// GaussLucasReport: {critical, hull, contained, max_field_at_critical,
// witnesses, ...}.
Json to_json(const GaussLucasReport& report);

}  // namespace gll
