#ifndef QHO_JSON_IO_HPP
#define QHO_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "qho/presentations.hpp"

namespace qho {

// Matrix wire format: {"rows": r, "cols": c, "data": [[re, im], ...]} with
// row-major data of length r*c. Spaces are not part of this format; loaded
// matrices get Base (or Unit, when one-dimensional) dom/cod tags.
nlohmann::json matrix_to_json(const Morphism& m);
Morphism matrix_from_json(const nlohmann::json& j);

// Space wire format: {"dim": d, "structure": "base" | "unit" |
// {"tensor": [...]} | {"biproduct": [...]} | {"fock": {"base": ..., "cutoff": N}}},
// plus an optional "dual": true wrapper flag.
nlohmann::json space_to_json(const SpaceObject& s);
SpaceObject space_from_json(const nlohmann::json& j);

// Presentations: carrier plus the two structure matrices.
nlohmann::json monoid_to_json(const MonoidPresentation& m);
MonoidPresentation monoid_from_json(const nlohmann::json& j, double tolerance = default_tolerance);
nlohmann::json comonoid_to_json(const ComonoidPresentation& c);
ComonoidPresentation comonoid_from_json(const nlohmann::json& j);

/// Reads and validates a matrix file. Throws ParseError on malformed input,
/// InvariantViolation on non-finite entries.
Morphism load_matrix(const std::string& path);
void save_matrix(const std::string& path, const Morphism& m);

nlohmann::json read_json_file(const std::string& path);

}  // namespace qho

#endif
