#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "dq/bv.hpp"
#include "dq/expr.hpp"
#include "dq/multivector.hpp"
#include "dq/wick.hpp"

namespace dq {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& require_field(const Json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string(context) + ": missing field '" + key + "'");
  return j.at(key);
}

inline int require_int(const Json& j, const char* key, const char* context) {
  const Json& v = require_field(j, key, context);
  if (!v.is_number_integer())
    throw InputError(std::string(context) + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace detail

/// "1,2" -> {0, 1}; indices are 1-based in text.
inline IndexList parse_index_key(const std::string& key, int dim) {
  IndexList idx;
  if (key.empty()) return idx;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw InputError("bad component key '" + key + "'");
    }
    if (used != part.size() || v < 1 || v > dim)
      throw InputError("component key '" + key + "' out of range 1.." + std::to_string(dim));
    idx.push_back(v - 1);
  }
  return idx;
}

inline std::string index_key(const IndexList& idx) {
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k] + 1);
  return s;
}

template <class Tag>
Json to_json(const Alternating<Tag>& a) {
  Json comps = Json::object();
  for (const auto& [idx, c] : a.components()) comps[index_key(idx)] = to_expr(c);
  return Json{{"dim", a.dim()}, {"degree", a.degree()}, {"components", comps}};
}

template <class T>
T alternating_from_json(const Json& j) {
  const char* ctx = "tensor";
  int dim = detail::require_int(j, "dim", ctx);
  int degree = detail::require_int(j, "degree", ctx);
  if (dim < 1) throw InputError("tensor: dim must be positive");
  if (degree < 0 || degree > dim) throw InputError("tensor: degree out of range");
  T a(dim, degree);
  const Json& comps = detail::require_field(j, "components", ctx);
  if (!comps.is_object()) throw InputError("tensor: 'components' must be an object");
  for (const auto& [key, value] : comps.items()) {
    if (!value.is_string()) throw InputError("tensor: component '" + key + "' must be a string");
    IndexList idx = parse_index_key(key, dim);
    if (static_cast<int>(idx.size()) != degree)
      throw InputError("tensor: component '" + key + "' has the wrong number of indices");
    a.add(idx, parse_polynomial(value.template get<std::string>(), dim));
  }
  return a;
}

inline Json to_json(const Scalar& s) { return to_string(s); }

inline Json to_json(const HbarPoly& p) {
  Json out = Json::object();
  for (int k = 0; k <= p.truncation(); ++k) out[std::to_string(k)] = to_string(p[k]);
  return out;
}

inline Json to_json(const StarSeries& s) {
  Json pt = Json::array();
  for (const auto& x : s.basepoint) pt.push_back(to_string(x));
  return Json{{"basepoint", pt}, {"series", to_json(s.series)}};
}

inline BVSpace bv_space_from_json(const Json& j) {
  const Json& fields = detail::require_field(j, "fields", "BV space");
  if (!fields.is_array()) throw InputError("BV space: 'fields' must be an array");
  std::vector<Field> out;
  for (const auto& f : fields) {
    const Json& name = detail::require_field(f, "name", "BV field");
    if (!name.is_string()) throw InputError("BV field: 'name' must be a string");
    int parity = detail::require_int(f, "parity", "BV field");
    if (parity != 0 && parity != 1) throw InputError("BV field: parity must be 0 or 1");
    std::string anti;
    if (f.contains("antifield")) {
      if (!f["antifield"].is_string()) throw InputError("BV field: 'antifield' must be a string");
      anti = f["antifield"].get<std::string>();
    }
    out.push_back({name.get<std::string>(), parity ? Parity::odd : Parity::even, anti});
  }
  return BVSpace(std::move(out));
}

inline Json to_json(const BVSpace& space) {
  Json fields = Json::array();
  for (const auto& f : space.fields())
    fields.push_back(
        Json{{"name", f.name}, {"parity", static_cast<int>(f.parity)}, {"antifield", f.antifield}});
  return Json{{"fields", fields}};
}

}  // namespace dq
