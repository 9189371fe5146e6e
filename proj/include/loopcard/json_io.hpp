#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "loopcard/caps.hpp"
#include "loopcard/catalog.hpp"
#include "loopcard/errors.hpp"
#include "loopcard/group.hpp"
#include "loopcard/space.hpp"

namespace loopcard {

using Json = nlohmann::json;

// Group descriptions: a catalog name string, {"table": [[...]]}, or
// {"perm": {"degree": d, "generators": [[...], ...]}} where a permutation is
// the image list of 0..d-1.
inline FiniteGroup group_from_json(const Json& j,
                                   std::uint64_t order_cap = global_caps().order_cap) {
  if (j.is_string()) return catalog_group(j.get<std::string>(), order_cap);
  if (!j.is_object()) throw MalformedTable("group description must be a name or an object");
  if (j.contains("table")) {
    const auto& t = j.at("table");
    if (!t.is_array()) throw MalformedTable("'table' must be an array of rows");
    std::vector<std::vector<Index>> rows;
    for (const auto& row : t) {
      if (!row.is_array()) throw MalformedTable("'table' rows must be arrays");
      rows.emplace_back();
      for (const auto& v : row) {
        if (!v.is_number_unsigned()) throw MalformedTable("table entries must be non-negative integers");
        rows.back().push_back(v.get<Index>());
      }
    }
    std::string label = j.value("label", std::string());
    return group_from_table(rows, label);
  }
  if (j.contains("perm")) {
    const auto& p = j.at("perm");
    if (!p.is_object() || !p.contains("degree") || !p.contains("generators"))
      throw MalformedTable("'perm' needs 'degree' and 'generators'");
    const Index degree = p.at("degree").get<Index>();
    std::vector<std::vector<Index>> gens;
    for (const auto& g : p.at("generators")) gens.push_back(g.get<std::vector<Index>>());
    std::string label = j.value("label", std::string());
    return group_from_permutations(degree, gens, label, order_cap);
  }
  throw MalformedTable("group description needs 'table' or 'perm'");
}

inline Json group_to_json(const FiniteGroup& G) {
  Json rows = Json::array();
  for (Index a = 0; a < G.order(); ++a) {
    Json row = Json::array();
    for (Index b = 0; b < G.order(); ++b) row.push_back(G.mul(a, b));
    rows.push_back(std::move(row));
  }
  Json j{{"table", std::move(rows)}};
  if (!G.label().empty()) j["label"] = G.label();
  return j;
}

inline FiniteGroupoid groupoid_from_json(const Json& j,
                                         std::uint64_t order_cap = global_caps().order_cap) {
  if (!j.is_object() || !j.contains("components"))
    throw MalformedTable("groupoid JSON needs a 'components' array");
  FiniteGroupoid A;
  for (const auto& c : j.at("components"))
    A.components.push_back(
        std::make_shared<const FiniteGroup>(group_from_json(c, order_cap)));
  return A;
}

inline Json groupoid_to_json(const FiniteGroupoid& A) {
  Json comps = Json::array();
  for (const auto& c : A.components) comps.push_back(group_to_json(*c));
  return Json{{"components", std::move(comps)}};
}

// Big integers serialize as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; both shapes are accepted on input.
inline Json bigint_to_json(const BigInt& v) {
  if (v >= BigInt(INT64_MIN) && v <= BigInt(INT64_MAX)) return v.convert_to<std::int64_t>();
  return v.str();
}

inline BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw MalformedTable("expected an integer or a decimal string");
}

inline PostnikovOrders orders_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("orders"))
    throw MalformedTable("stable space JSON needs an 'orders' array");
  std::vector<BigInt> orders;
  for (const auto& v : j.at("orders")) orders.push_back(bigint_from_json(v));
  return PostnikovOrders(std::move(orders));
}

inline Json orders_to_json(const PostnikovOrders& A) {
  Json out = Json::array();
  for (const auto& o : A.orders()) out.push_back(bigint_to_json(o));
  return Json{{"orders", std::move(out)}};
}

inline Json space_to_json(const Space& s) {
  if (is_groupoid(s)) return groupoid_to_json(std::get<FiniteGroupoid>(s));
  return orders_to_json(std::get<PostnikovOrders>(s));
}

// Exact value: a JSON number when integral and small enough, otherwise
// "num" / "num/den" as a string. Never floating point.
inline Json rational_to_json(const Rational& q) {
  if (is_integer(q)) return bigint_to_json(rational_num(q));
  return rational_to_string(q);
}

}  // namespace loopcard
