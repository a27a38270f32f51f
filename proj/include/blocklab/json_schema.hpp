#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace blocklab {

// Validator for the subset of JSON Schema draft-07 used by the shipped
// schema files: type (string or list), enum, required, properties,
// additionalProperties (boolean), items (single schema), minimum.
// Returns a list of human-readable violations; empty means valid.
std::vector<std::string> validate_against_schema(const nlohmann::ordered_json& doc,
                                                 const nlohmann::ordered_json& schema);

}  // namespace blocklab
