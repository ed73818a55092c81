// Machine-readable (JSON) form of schemata, analyses and reports.
//
// Schema:  {"universe": [term...], "ru": [atom...], "ru_bar": [...],
//           "rd": [...], "rd_bar": [...]}
// Report:  {"unsatisfiable": bool, "optimistic_models": [schema...],
//           "presuppositions": [{"literal", "status", "sources"}...],
//           "disputed": [...]}
// Terms, atoms and literals are strings in machine notation (see format.hpp).
// Output is deterministic: identical inputs give byte-identical text.

#ifndef STRATA_SERIALIZE_HPP
#define STRATA_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "strata/presup.hpp"
#include "strata/schemata.hpp"

namespace strata {

using Json = nlohmann::ordered_json;

Json to_json(const ModelSchema& m);
ModelSchema schema_from_json(const nlohmann::json& j);

Json to_json(const PresuppositionReport& r);
PresuppositionReport report_from_json(const nlohmann::json& j);

// Every schema of an analysis, tagged with its position (m1, m2, ...) and
// whether it is minimal and most optimistic. With optimistic_only, the
// non-optimistic ones are left out.
Json to_json(const Analysis& a, bool optimistic_only);

// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace strata

#endif  // STRATA_SERIALIZE_HPP
