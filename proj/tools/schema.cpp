#include "schema.hpp"

#include <regex>

namespace statikit::io {

using nlohmann::json;

namespace {

const json& definitions() {
  static const json defs = json::parse(R"({
    "int": {"type": "string", "pattern": "^-?[0-9]+$"},
    "nat": {"type": "string", "pattern": "^[0-9]+$"},
    "rational": {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"},
    "vector": {"type": "array", "items": {"$ref": "#/definitions/int"}},
    "cone": {"type": "object", "required": ["rays"], "additionalProperties": false,
             "properties": {"rays": {"type": "array", "items": {"$ref": "#/definitions/vector"}}}},
    "fan": {"type": "object", "required": ["support", "cones"], "additionalProperties": false,
            "properties": {"ambient_dim": {"$ref": "#/definitions/nat"},
                           "support": {"$ref": "#/definitions/cone"},
                           "cones": {"type": "array", "items": {"$ref": "#/definitions/cone"}}}},
    "term": {"type": "object", "required": ["coeff", "exp"], "additionalProperties": false,
             "properties": {"coeff": {"$ref": "#/definitions/rational"},
                            "exp": {"$ref": "#/definitions/vector"},
                            "comp": {"$ref": "#/definitions/nat"}}},
    "terms": {"type": "array", "items": {"$ref": "#/definitions/term"}},
    "poly": {"anyOf": [{"type": "string"}, {"$ref": "#/definitions/terms"}]},
    "chart": {"type": "object", "required": ["cone"], "additionalProperties": false,
              "properties": {"cone": {"$ref": "#/definitions/cone"},
                             "basis": {"type": "array", "items": {"$ref": "#/definitions/vector"}}}},
    "presentation": {"type": "object", "required": ["nvars", "rows", "matrix"], "additionalProperties": false,
                     "properties": {"nvars": {"$ref": "#/definitions/nat"},
                                    "rows": {"$ref": "#/definitions/nat"},
                                    "columns": {"$ref": "#/definitions/nat"},
                                    "chart": {"$ref": "#/definitions/chart"},
                                    "matrix": {"type": "array",
                                               "items": {"type": "array", "items": {"$ref": "#/definitions/poly"}}}}},
    "submodule": {"type": "object", "required": ["nvars", "rank", "generators"], "additionalProperties": false,
                  "properties": {"nvars": {"$ref": "#/definitions/nat"},
                                 "rank": {"$ref": "#/definitions/nat"},
                                 "generators": {"type": "array", "items": {"$ref": "#/definitions/poly"}}}},
    "graph": {"type": "object", "required": ["vertices", "edges"], "additionalProperties": false,
              "properties": {"vertices": {"$ref": "#/definitions/nat"},
                             "edges": {"type": "array",
                                       "items": {"type": "array", "minItems": 2, "maxItems": 2,
                                                 "items": {"$ref": "#/definitions/nat"}}}}},
    "report": {"type": "object", "required": ["face", "degree", "vanishes"], "additionalProperties": false,
               "properties": {"face": {"type": "array", "items": {"$ref": "#/definitions/nat"}},
                              "degree": {"$ref": "#/definitions/nat"},
                              "vanishes": {"type": "boolean"},
                              "witness": {"$ref": "#/definitions/terms"}}},
    "reports": {"type": "array", "items": {"$ref": "#/definitions/report"}},
    "stratification": {"type": "object", "required": ["support", "strata", "cells"], "additionalProperties": false,
                       "properties": {"support": {"$ref": "#/definitions/cone"},
                                      "strata": {"$ref": "#/definitions/nat"},
                                      "cells": {"type": "array", "items": {
                                        "type": "object", "required": ["cone", "stratum", "initial_module"],
                                        "additionalProperties": false,
                                        "properties": {"cone": {"$ref": "#/definitions/cone"},
                                                       "stratum": {"$ref": "#/definitions/nat"},
                                                       "initial_module": {"type": "array",
                                                         "items": {"$ref": "#/definitions/terms"}}}}}}},
    "chart_report": {"type": "object", "required": ["cone", "static", "reports"],
                     "properties": {"cone": {"$ref": "#/definitions/cone"},
                                    "pullback": {"$ref": "#/definitions/presentation"},
                                    "static": {"type": "boolean"},
                                    "reports": {"$ref": "#/definitions/reports"}}},
    "certificate": {"type": "object",
                    "required": ["format", "input_sha256", "input", "kernel", "stratification", "input_static",
                                 "output_fan", "output_refines", "charts", "complete", "all_static"],
                    "additionalProperties": false,
                    "properties": {"format": {"enum": ["statikit-cert/1"]},
                                   "input_sha256": {"type": "string", "pattern": "^[0-9a-f]{64}$"},
                                   "input": {"$ref": "#/definitions/presentation"},
                                   "kernel": {"$ref": "#/definitions/submodule"},
                                   "stratification": {"$ref": "#/definitions/stratification"},
                                   "input_static": {"type": "boolean"},
                                   "output_fan": {"$ref": "#/definitions/fan"},
                                   "output_refines": {"type": "boolean"},
                                   "charts": {"type": "array", "items": {"$ref": "#/definitions/chart_report"}},
                                   "complete": {"type": "boolean"},
                                   "all_static": {"type": "boolean"},
                                   "audit": {"type": "object",
                                             "required": ["presentation", "kernel", "refines_primary",
                                                          "refines_alternative", "agrees"],
                                             "properties": {"presentation": {"$ref": "#/definitions/presentation"},
                                                            "kernel": {"$ref": "#/definitions/submodule"},
                                                            "refines_primary": {"type": "boolean"},
                                                            "refines_alternative": {"type": "boolean"},
                                                            "agrees": {"type": "boolean"}}}}}
  })");
  return defs;
}

json with_definitions(json schema) {
  schema["definitions"] = definitions();
  return schema;
}

json object_of(const json& properties, const json& required) {
  return json{{"type", "object"}, {"properties", properties}, {"required", required}, {"additionalProperties", false}};
}

json ref(const std::string& name) { return json{{"$ref", "#/definitions/" + name}}; }

std::string type_of(const json& j) {
  if (j.is_object()) return "object";
  if (j.is_array()) return "array";
  if (j.is_string()) return "string";
  if (j.is_boolean()) return "boolean";
  if (j.is_null()) return "null";
  if (j.is_number_integer() || j.is_number_unsigned()) return "integer";
  return "number";
}

bool type_matches(const json& j, const std::string& type) {
  auto actual = type_of(j);
  return actual == type || (type == "number" && actual == "integer");
}

std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::optional<SchemaViolation> check(const json& doc, const json& schema, const json& root, const std::string& path) {
  if (schema.contains("$ref")) {
    const std::string target = schema["$ref"];
    const std::string prefix = "#/definitions/";
    if (target.rfind(prefix, 0) != 0 || !root["definitions"].contains(target.substr(prefix.size())))
      return SchemaViolation{path, "unresolvable schema reference " + target};
    return check(doc, root["definitions"][target.substr(prefix.size())], root, path);
  }
  if (schema.contains("anyOf")) {
    std::optional<SchemaViolation> last;
    for (const auto& alt : schema["anyOf"]) {
      last = check(doc, alt, root, path);
      if (!last) break;
    }
    if (last) return SchemaViolation{path, "matches no alternative (" + last->message + " at " + last->path + ")"};
  }
  if (schema.contains("type")) {
    const auto& t = schema["type"];
    bool ok = false;
    if (t.is_array()) {
      for (const auto& x : t) ok = ok || type_matches(doc, x.get<std::string>());
    } else {
      ok = type_matches(doc, t.get<std::string>());
    }
    if (!ok) return SchemaViolation{path, "expected " + t.dump() + ", found " + type_of(doc)};
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& v : schema["enum"]) found = found || v == doc;
    if (!found) return SchemaViolation{path, "value not in " + schema["enum"].dump()};
  }
  if (schema.contains("pattern") && doc.is_string()) {
    std::regex re(schema["pattern"].get<std::string>());
    if (!std::regex_search(doc.get<std::string>(), re))
      return SchemaViolation{path, "string does not match " + schema["pattern"].get<std::string>()};
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema["required"])
        if (!doc.contains(key.get<std::string>()))
          return SchemaViolation{path + "/" + escape_pointer(key), "missing required field"};
    for (const auto& [key, value] : doc.items()) {
      auto child = path + "/" + escape_pointer(key);
      if (schema.contains("properties") && schema["properties"].contains(key)) {
        if (auto v = check(value, schema["properties"][key], root, child)) return v;
      } else if (schema.value("additionalProperties", true) == false) {
        return SchemaViolation{child, "unexpected field"};
      }
    }
  }
  if (doc.is_array()) {
    if (schema.contains("minItems") && doc.size() < schema["minItems"].get<std::size_t>())
      return SchemaViolation{path, "too few items"};
    if (schema.contains("maxItems") && doc.size() > schema["maxItems"].get<std::size_t>())
      return SchemaViolation{path, "too many items"};
    if (schema.contains("items"))
      for (std::size_t i = 0; i < doc.size(); ++i)
        if (auto v = check(doc[i], schema["items"], root, path + "/" + std::to_string(i))) return v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SchemaViolation> validate(const json& document, const json& schema) {
  return check(document, schema, schema, "");
}

std::optional<json> input_schema(const std::string& subcommand) {
  if (subcommand == "stratify")
    return with_definitions(object_of({{"module", ref("submodule")}, {"support", ref("cone")}}, {"module"}));
  if (subcommand == "statify" || subcommand == "check-static")
    return with_definitions(object_of({{"presentation", ref("presentation")}}, {"presentation"}));
  if (subcommand == "tor-dim")
    return with_definitions(object_of({{"presentation", ref("presentation")}, {"d", ref("nat")}}, {"presentation", "d"}));
  if (subcommand == "verify-theorem")
    return with_definitions(object_of({{"presentation", ref("presentation")}, {"fan", ref("fan")}}, {"presentation", "fan"}));
  if (subcommand == "jacobian") return with_definitions(ref("graph"));
  if (subcommand == "chip-equiv" || subcommand == "firing-script")
    return with_definitions(
        object_of({{"graph", ref("graph")}, {"d1", ref("vector")}, {"d2", ref("vector")}}, {"graph", "d1", "d2"}));
  if (subcommand == "replay") return with_definitions(ref("certificate"));
  return std::nullopt;
}

std::optional<json> output_schema(const std::string& subcommand) {
  const json boolean{{"type", "boolean"}};
  if (subcommand == "stratify")
    return with_definitions(object_of({{"stratification", ref("stratification")}}, {"stratification"}));
  if (subcommand == "statify") return with_definitions(ref("certificate"));
  if (subcommand == "check-static")
    return with_definitions(object_of({{"static", boolean}, {"log_flat", boolean}, {"reports", ref("reports")}},
                                      {"static", "log_flat", "reports"}));
  if (subcommand == "tor-dim")
    return with_definitions(
        object_of({{"d", ref("nat")}, {"holds", boolean}, {"reports", ref("reports")}}, {"d", "holds", "reports"}));
  if (subcommand == "verify-theorem")
    return with_definitions(object_of({{"refines", boolean},
                                       {"all_static", boolean},
                                       {"agrees", boolean},
                                       {"charts", json{{"type", "array"}, {"items", ref("chart_report")}}}},
                                      {"refines", "all_static", "agrees", "charts"}));
  if (subcommand == "jacobian")
    return with_definitions(object_of(
        {{"invariant_factors", json{{"type", "array"}, {"items", ref("nat")}}}, {"order", ref("nat")}},
        {"invariant_factors", "order"}));
  if (subcommand == "chip-equiv")
    return with_definitions(object_of(
        {{"equivalent", boolean}, {"reduced_d1", ref("vector")}, {"reduced_d2", ref("vector")}},
        {"equivalent", "reduced_d1", "reduced_d2"}));
  if (subcommand == "firing-script")
    return with_definitions(object_of(
        {{"equivalent", boolean}, {"script", json{{"anyOf", json::array({ref("vector"), json{{"type", "null"}}})}}}},
        {"equivalent", "script"}));
  if (subcommand == "replay")
    return with_definitions(object_of(
        {{"ok", boolean}, {"mismatches", json{{"type", "array"}, {"items", json{{"type", "string"}}}}}},
        {"ok", "mismatches"}));
  return std::nullopt;
}

}  // namespace statikit::io
