#include <doctest.h>

#include "circulant/autsolver.hpp"
#include "circulant/errors.hpp"
#include "circulant/serialize.hpp"
#include "helpers.hpp"

using namespace circulant;
using test_support::circ;

TEST_CASE("description trees") {
  const auto j = to_json(aut_pq(circ(6, {2, 4})));
  CHECK(j["kind"] == "wreath");
  CHECK(j["layout"] == "coset");
  CHECK(j["outer"]["kind"] == "symmetric");
  CHECK(j["order"] == "72");
  const auto h = to_json(aut_prime(circ(5, {1, 4})));
  CHECK(h.dump() == R"({"kind":"holomorph","n":5,"multipliers":[1,4],"order":"10"})");
}

TEST_CASE("generators round trip and preserve adjacency") {
  const auto x = circ(30, {15});
  const PermGroup g = realize(aut(x).description);
  const auto parsed = generators_from_json(nlohmann::ordered_json::parse(to_json(g.generators()).dump()));
  CHECK(parsed == g.generators());
  for (const auto& p : parsed) CHECK(preserves_adjacency(x, p.images()));
  CHECK(order_from_string(g.order().str()) == g.order());
  CHECK_THROWS_AS(order_from_string("12a"), InvalidArgument);
  CHECK_THROWS_AS(generators_from_json(nlohmann::ordered_json::parse("[[0,0]]")), InvalidArgument);
}
