#pragma once

#include <string>

#include <json.hpp>

#include "statikit/statify.hpp"
#include "statikit/tropical_pic.hpp"

namespace statikit::io {

using nlohmann::json;

/// Raised on well-formed JSON that does not describe a valid object; `path`
/// is a JSON pointer to the offending value.
class InputError : public std::runtime_error {
 public:
  InputError(std::string path, const std::string& what) : std::runtime_error(what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

json to_json(const Integer& z);
json to_json(const IntVector& v);
json to_json(const RationalCone& c);
json to_json(const Fan& f);
json to_json(const ModuleVector& v);
json to_json(const Submodule& m);
json to_json(const MarkedGB& gb);
json to_json(const GroebnerStratification& s);
json to_json(const SmoothChart& c);
json to_json(const ModulePresentation& p);
json to_json(const TorReport& r);
json to_json(const TorDimensionReport& r);
json to_json(const StatificationCertificate& c);
json to_json(const Graph& g);

/// Readers take the JSON pointer of `j` for error messages.
Integer integer_from(const json& j, const std::string& path);
std::size_t index_from(const json& j, const std::string& path);
IntVector vector_from(const json& j, const std::string& path);
RationalCone cone_from(const json& j, std::size_t dim, const std::string& path);
Fan fan_from(const json& j, std::size_t dim, const std::string& path);
/// A term list or a string such as "y^2*e1 - x^2*e2".
ModuleVector module_vector_from(const json& j, std::size_t nvars, std::size_t rank, const std::string& path);
Submodule submodule_from(const json& j, const std::string& path);
MarkedGB marked_gb_from(const json& j, std::size_t nvars, std::size_t rank, const std::string& path);
GroebnerStratification stratification_from(const json& j, std::size_t nvars, std::size_t rank,
                                           const std::string& path);
ModulePresentation presentation_from(const json& j, const std::string& path);
TorDimensionReport tor_reports_from(const json& j, std::size_t nvars, std::size_t rows, const std::string& path);
StatificationCertificate certificate_from(const json& j);
Graph graph_from(const json& j, const std::string& path);

/// Parses a (Laurent) polynomial or module vector written with x,y,z,w or
/// x1..x8, unit vectors e1..em, integer or p/q coefficients and ^ exponents.
ModuleVector parse_module_vector(const std::string& text, std::size_t nvars, std::size_t rank);

/// Hex SHA-256 of the canonical serialization.
std::string sha256_hex(const std::string& bytes);

}  // namespace statikit::io
