#pragma once

#include <json.hpp>

#include "genival/core.hpp"
#include "genival/lp.hpp"

namespace genival {

/// Rounded to 12 significant digits so serialized output is stable.
double json_real(double v);

/// {"lo","hi"} for positive classes and points, {"dual": {"lo","hi"}} for
/// negative classes (the canonical interval).
nlohmann::json to_json(const gelement& x);

/// Accepts {"lo","hi"}, {"point"} and {"dual": {"lo","hi"}}.
gelement gelement_from_json(const nlohmann::json& j);

namespace lp {

/// {"objective": [c...], "constraints": [{"coeffs": [...], "rhs": {...}}...],
///  "sense": "max"}; optional "form": "leq" | "eq" and "basis": [...] for "eq".
/// Throws error(errc::parse_error) on schema violations.
problem problem_from_json(const nlohmann::json& j);

/// {"status", "solution", "objective", "objective_center", "pivots"}.
nlohmann::json to_json(const outcome& o);

} // namespace lp
} // namespace genival
