#pragma once

#include <string>

#include "json.hpp"
#include "pointmod/genfun.hpp"
#include "pointmod/modrep.hpp"
#include "pointmod/motive.hpp"

namespace pointmod {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// {"text": "...", "numerator": [c0, c1, ...], "denominator": [...]}; integers
/// that do not fit in 64 bits are written as decimal strings.
Json motive_to_json(const Motive& m);
/// Accepts the object form or a plain text string. Throws Error{ParseError}.
Motive motive_from_json(const Json& j);

/// [{"degree": i, "motive": {...}}, ...]
Json series_to_json(const MotiveSeries& s);

/// {"n", "field": {"type": "rational"} | {"type": "prime", "p"}, "x", "y"} with
/// entries given as integers or "a/b" strings. Throws Error{ParseError} on a
/// malformed document and the validate() errors on a bad pair of matrices.
ModulePresentation module_from_json(const Json& j);
Json module_to_json(const ModulePresentation& m);

/// Label, parameters, r, powerDims, endDim, autMotive and summands, with schemaVersion.
Json classification_report(const ModulePresentation& m);

}  // namespace pointmod
