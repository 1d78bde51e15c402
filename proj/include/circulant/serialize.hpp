#pragma once

// JSON forms of permutations, groups and their descriptions.

#include <json.hpp>

#include "circulant/description.hpp"
#include "circulant/graph.hpp"

namespace circulant {

nlohmann::ordered_json to_json(const Permutation& g);
nlohmann::ordered_json to_json(const std::vector<Permutation>& gens);
/// Recursive description tree keyed by "kind".
nlohmann::ordered_json to_json(const GroupDescription& d);
nlohmann::ordered_json to_json(const ResidueSet& set);

/// Image arrays back into permutations; throws InvalidArgument on bad input.
std::vector<Permutation> generators_from_json(const nlohmann::ordered_json& j);

/// Exact order from its decimal string form.
BigInt order_from_string(const std::string& text);

}  // namespace circulant
