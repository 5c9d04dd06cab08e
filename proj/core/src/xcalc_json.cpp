#include "cxs/xcalc_json.hpp"

#include <fstream>
#include <sstream>

namespace cxs::xcalc {

namespace {

Blade basis_blade(const json& names, const Coordinates& coords) {
  Blade b = 0;
  Poly probe(coords);
  for (const auto& n : names) {
    Blade bit = Blade{1} << probe.index_of(n.get<std::string>());
    if (b & bit) throw std::invalid_argument("repeated basis index");
    b |= bit;
  }
  return b;
}

// Sign of dx_{n1}^…^dx_{nk} relative to the sorted blade.
int ordering_sign(const json& names, const Coordinates& coords) {
  Poly probe(coords);
  std::vector<std::size_t> idx;
  for (const auto& n : names) idx.push_back(probe.index_of(n.get<std::string>()));
  int s = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] > idx[j]) s = -s;
  return s;
}

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    std::size_t line = 1, column = 1;
    const std::size_t stop = e.byte == 0 ? 0 : std::min(e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw JsonSyntaxError(e.what(), line, column);
  }
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw std::invalid_argument("scalars are strings like \"1/2-3 i\" or integers");
}

json to_json(const Scalar& s) { return s.str(); }

Coordinates coordinates_from_json(const json& j, const Coordinates& fallback) {
  if (j.is_object() && j.contains("coordinates")) return j.at("coordinates").get<Coordinates>();
  return fallback;
}

json to_json(const Poly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", c.str()}});
  return {{"coordinates", p.coordinates()}, {"terms", terms}};
}

Poly poly_from_json(const json& j, const Coordinates& coords) {
  if (j.is_string()) return parse_poly(j.get<std::string>(), coords);
  if (j.is_number_integer()) return Poly(coords, Scalar(j.get<long>()));
  if (!j.is_object()) throw std::invalid_argument("polynomial must be an object or an expression string");
  Coordinates cs = coordinates_from_json(j, coords);
  Poly p(cs);
  for (const auto& t : j.at("terms")) p.add_term(t.at("exponents").get<Exponents>(), scalar_from_json(t.at("coeff")));
  return p;
}

json to_json(const PolyForm& a) {
  json terms = json::array();
  for (const auto& [b, c] : a.coeffs()) {
    json names = json::array();
    for (std::size_t i = 0; i < a.coordinates().size(); ++i)
      if (b & (Blade{1} << i)) names.push_back(a.coordinates()[i]);
    json coeff = to_json(c);
    coeff.erase("coordinates");
    terms.push_back({{"basis", names}, {"coeff", coeff}});
  }
  return {{"coordinates", a.coordinates()}, {"degree", a.degree()}, {"terms", terms}};
}

PolyForm form_from_json(const json& j, const Coordinates& coords) {
  if (!j.is_object()) throw std::invalid_argument("form must be an object");
  Coordinates cs = coordinates_from_json(j, coords);
  PolyForm a(cs, j.at("degree").get<int>());
  for (const auto& t : j.at("terms")) {
    const json& names = t.at("basis");
    a.add_term(basis_blade(names, cs), Scalar(ordering_sign(names, cs)) * poly_from_json(t.at("coeff"), cs));
  }
  return a;
}

json to_json(const PolyVField& v) {
  json comps = json::array();
  for (const auto& c : v.components()) {
    json p = to_json(c);
    p.erase("coordinates");
    comps.push_back(p);
  }
  return {{"coordinates", v.coordinates()}, {"components", comps}};
}

PolyVField vfield_from_json(const json& j, const Coordinates& coords) {
  Coordinates cs = coordinates_from_json(j, coords);
  const json& comps = j.is_array() ? j : j.at("components");
  std::vector<Poly> polys;
  for (const auto& c : comps) polys.push_back(poly_from_json(c, cs));
  return PolyVField(cs, std::move(polys));
}

}  // namespace cxs::xcalc
