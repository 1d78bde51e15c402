#include "circulant/serialize.hpp"

#include "circulant/errors.hpp"

namespace circulant {

using nlohmann::ordered_json;

ordered_json to_json(const Permutation& g) {
  return ordered_json(std::vector<int>(g.images().begin(), g.images().end()));
}

ordered_json to_json(const std::vector<Permutation>& gens) {
  ordered_json out = ordered_json::array();
  for (const auto& g : gens) out.push_back(to_json(g));
  return out;
}

ordered_json to_json(const ResidueSet& set) { return ordered_json(set); }

ordered_json to_json(const GroupDescription& d) {
  ordered_json out;
  const auto& node = d.node();
  if (const auto* s = std::get_if<GroupDescription::Symmetric>(&node)) {
    out["kind"] = "symmetric";
    out["degree"] = s->degree;
  } else if (const auto* h = std::get_if<GroupDescription::Holomorph>(&node)) {
    out["kind"] = "holomorph";
    out["n"] = h->multipliers.modulus();
    out["multipliers"] = h->multipliers.elements();
  } else if (const auto* w = std::get_if<GroupDescription::Wreath>(&node)) {
    out["kind"] = "wreath";
    out["layout"] = w->layout == WreathLayout::Coset ? "coset" : "product";
    out["outer"] = to_json(*w->outer);
    out["inner"] = to_json(*w->inner);
  } else if (const auto* p = std::get_if<GroupDescription::DirectProduct>(&node)) {
    out["kind"] = "direct";
    out["left"] = to_json(*p->left);
    out["right"] = to_json(*p->right);
  } else {
    const auto& g = std::get<GroupDescription::GeneratedBy>(node);
    out["kind"] = "generators";
    out["degree"] = g.degree;
    out["generators"] = to_json(g.generators);
  }
  out["order"] = d.symbolic_order().str();
  return out;
}

std::vector<Permutation> generators_from_json(const ordered_json& j) {
  if (!j.is_array()) throw InvalidArgument("generators must be a JSON array");
  std::vector<Permutation> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw InvalidArgument("generator must be an image array");
    out.emplace_back(row.get<std::vector<int>>());
  }
  return out;
}

BigInt order_from_string(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidArgument("order must be a decimal string, got '" + text + "'");
  return BigInt(text);
}

}  // namespace circulant
