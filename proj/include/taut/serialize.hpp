#ifndef TAUT_SERIALIZE_HPP
#define TAUT_SERIALIZE_HPP

#include <string>

#include "json.hpp"
#include "taut/pairing.hpp"
#include "taut/strata.hpp"

namespace taut {

using Json = nlohmann::ordered_json;

// {vertices, half_edges, edges, legs}; half_edges[h] is the vertex of h.
Json graph_to_json(const StableGraph& g);
StableGraph graph_from_json(const Json& j);

// Monomial list [[exponents], "p/q"] in graded lexicographic order plus the variable layout.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json class_to_json(const TautClass& x);
Json class_to_json(const PolyTautClass& x);
TautClass class_from_json(const Json& j);
PolyTautClass poly_class_from_json(const Json& j);

enum class ExportFormat { json, text };

// One "coefficient  stratum" line per term in key order.
std::string class_to_text(const TautClass& x);
std::string class_to_text(const PolyTautClass& x);
std::string export_class(const TautClass& x, ExportFormat f);
std::string export_class(const PolyTautClass& x, ExportFormat f);

Json report_to_json(const PairingReport& r);
std::string report_to_text(const PairingReport& r);

}  // namespace taut

#endif
