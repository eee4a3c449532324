#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace statikit::io {

/// First violation found while checking a document against a schema.
struct SchemaViolation {
  std::string path;
  std::string message;
};

/// Validates the subset of JSON Schema used by the CLI schemas: type, enum,
/// pattern, properties, required, additionalProperties (boolean), items,
/// minItems, anyOf and local $ref into "definitions".
std::optional<SchemaViolation> validate(const nlohmann::json& document, const nlohmann::json& schema);

/// Input and output schemas of a subcommand, or nullopt for an unknown name.
std::optional<nlohmann::json> input_schema(const std::string& subcommand);
std::optional<nlohmann::json> output_schema(const std::string& subcommand);

}  // namespace statikit::io
