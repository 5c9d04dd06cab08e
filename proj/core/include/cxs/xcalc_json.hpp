#pragma once

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

#include "cxs/forms.hpp"

// JSON layout (scalars are strings such as "3/4-1/2 i"):
//
//   Poly       {"coordinates": ["u","x","y"], "terms": [{"exponents": [1,0,2], "coeff": "1/2"}]}
//              or, where the coordinates are known from context, an expression string "u*y^2/2".
//   PolyForm   {"coordinates": [...], "degree": 2, "terms": [{"basis": ["x","y"], "coeff": <Poly>}]}
//   PolyVField {"coordinates": [...], "components": [<Poly>, ...]}

namespace cxs::xcalc {

using json = nlohmann::json;

/// Malformed JSON text, with a 1-based position.
class JsonSyntaxError : public std::runtime_error {
 public:
  JsonSyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Throws JsonSyntaxError.
json parse_json_text(const std::string& text);
/// Throws std::runtime_error when the file cannot be read, JsonSyntaxError when it does not parse.
json load_json_file(const std::string& path);

Scalar scalar_from_json(const json& j);
json to_json(const Scalar& s);

json to_json(const Poly& p);
/// coords is used for expression strings and for objects without a "coordinates" entry.
Poly poly_from_json(const json& j, const Coordinates& coords = {});

json to_json(const PolyForm& a);
PolyForm form_from_json(const json& j, const Coordinates& coords = {});

json to_json(const PolyVField& v);
PolyVField vfield_from_json(const json& j, const Coordinates& coords = {});

Coordinates coordinates_from_json(const json& j, const Coordinates& fallback = {});

}  // namespace cxs::xcalc
