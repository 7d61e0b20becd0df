#include "tropical/json.hpp"

#include <string>
#include <vector>

#include "tropical/error.hpp"

namespace tropical {
namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object", 0);
  const auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(std::string("missing field \"") + key + "\"", 0);
  }
  return *it;
}

std::size_t degree_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(std::string("\"") + key +
                         "\" must be a non-negative integer", 0);
  }
  return v.get<std::size_t>();
}

std::vector<ExtendedRational> scalar_list(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) {
    throw ParseError(std::string("\"") + key + "\" must be an array", 0);
  }
  std::vector<ExtendedRational> out;
  out.reserve(v.size());
  for (const json& s : v) {
    if (!s.is_string()) {
      throw ParseError(std::string("\"") + key +
                           "\" entries must be scalar strings", 0);
    }
    out.push_back(parse_scalar(s.get<std::string>()));
  }
  return out;
}

json scalar_strings(std::span<const ExtendedRational> values) {
  json arr = json::array();
  for (const ExtendedRational& v : values) arr.push_back(v.to_string());
  return arr;
}

}  // namespace

json to_json(const TropPoly& f) {
  return {{"low_degree", f.low_degree()}, {"coeffs", scalar_strings(f.coeffs())}};
}

TropPoly poly_from_json(const json& j) {
  const std::size_t r = degree_field(j, "low_degree");
  return TropPoly(r, scalar_list(j, "coeffs"));
}

json to_json(const Factorization& fac) {
  return {{"leading", fac.leading().to_string()},
          {"monomial_degree", fac.monomial_degree()},
          {"roots", scalar_strings(fac.roots())}};
}

Factorization factorization_from_json(const json& j) {
  const json& leading = field(j, "leading");
  if (!leading.is_string()) {
    throw ParseError("\"leading\" must be a scalar string", 0);
  }
  ExtendedRational lead = parse_scalar(leading.get<std::string>());
  if (lead.is_infinite()) throw ParseError("\"leading\" must be finite", 0);
  std::vector<ExtendedRational> roots = scalar_list(j, "roots");
  for (const ExtendedRational& d : roots) {
    if (d.is_infinite()) throw ParseError("roots must be finite", 0);
  }
  return Factorization(std::move(lead), degree_field(j, "monomial_degree"),
                       std::move(roots));
}

}  // namespace tropical
