#pragma once

#include "qonsager/freealg.hpp"

#include <json.hpp>

namespace qons {

// {"num": [[qe, ce, "k"], ...], "den": [...]}
nlohmann::json to_json(IntPoly const &p);
nlohmann::json to_json(Scalar const &s);
// [[word, scalar], ...] in term order
nlohmann::json to_json(NcPoly const &x);

// FormatError on malformed input
IntPoly intpoly_from_json(nlohmann::json const &j);
Scalar scalar_from_json(nlohmann::json const &j);
NcPoly ncpoly_from_json(nlohmann::json const &j);

} // namespace qons
