#ifndef SYMHODGE_JSON_IO_HPP
#define SYMHODGE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "symhodge/identities.hpp"
#include "symhodge/presentation.hpp"
#include "symhodge/symprod.hpp"

namespace symhodge {

using Json = nlohmann::ordered_json;

/// Canonical JSON form of a polynomial: an array of term records
/// {"k":., "p":., "q":., "c":"<decimal>"} in (k, p, q)-lex order.
/// Coefficients travel as decimal strings to keep arbitrary precision.
Json poly_to_json(const TriPoly& poly);
TriPoly poly_from_json(const Json& j);

/// Presentation schema:
/// {"label": string?, "generators": [{"d":., "p":., "q":., "r":.}, ...]}.
Json presentation_to_json(const ExteriorPresentation& pres);
ExteriorPresentation presentation_from_json(const Json& j);

/// Reads and validates a presentation file (odd degrees, positive
/// multiplicities; duplicate signatures merge).
ExteriorPresentation load_presentation(const std::string& path);

Json table_to_json(const HodgeTable& table);
Json series_to_json(const ZSeries& series);
Json class_function_to_json(const ClassFunction& cf);
Json sym_result_to_json(const SymResult& result);
Json report_to_json(const IdentityReport& report, const std::string& name);

}  // namespace symhodge

#endif
