#pragma once

#include <string>
#include <vector>

namespace centlab::testing {

/// Validates a JSON document against the subset of JSON Schema the shipped
/// schema files use: type (single or union), properties, required, items,
/// enum, additionalProperties. Returns human-readable problems; empty means
/// the document validates.
std::vector<std::string> validate_against_schema(const std::string &document_text,
                                                 const std::string &schema_text);

/// Loads a schema file from the repository's schemas/ directory.
std::string load_schema(const std::string &filename);

} // namespace centlab::testing
