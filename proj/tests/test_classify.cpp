#include <doctest.h>

#include <algorithm>
#include <random>

#include "circulant/classify.hpp"
#include "circulant/errors.hpp"
#include "helpers.hpp"

using namespace circulant;
using test_support::circ;

TEST_CASE("edge_transitive_prime examples") {
  CHECK(edge_transitive_prime(circ(5, {1, 4})));
  CHECK_FALSE(edge_transitive_prime(circ(7, {1, 2, 5, 6})));
  CHECK(edge_transitive_prime(circ(13, test_support::squares_mod(13))));
  CHECK(edge_transitive_prime(circ(7, {})));
  CHECK(edge_transitive_prime(circ(2, {1})));
  CHECK_THROWS_AS(edge_transitive_prime(circ(6, {1, 5})), InvalidArgument);
}

TEST_CASE("edge transitivity agrees with orbit counts") {
  for (Int p : {3, 5, 7, 11, 13})
    for (const auto& s : symmetric_connection_sets(p)) {
      const auto x = circ(p, s);
      CHECK(edge_transitive_prime(x) == (edge_orbit_count(x) <= 1));
    }
}

TEST_CASE("two_arc_classify examples") {
  for (Int n = 3; n <= 12; ++n) CHECK(two_arc_classify(circ(n, {1, n - 1})).label ==
                                      (n == 3 ? TwoArcLabel::Complete
                                              : n == 4 ? TwoArcLabel::CompleteBipartite
                                                       : TwoArcLabel::Cycle));
  const auto k5 = two_arc_classify(circ(5, {1, 2, 3, 4}));
  CHECK(k5.label == TwoArcLabel::Complete);
  CHECK(k5.detail == "exactly 2-arc-transitive");
  CHECK(two_arc_classify(circ(10, {1, 3, 7, 9})).label ==
        TwoArcLabel::CompleteBipartiteMinusFactor);
  CHECK(two_arc_classify(circ(6, {1, 3, 5})).label == TwoArcLabel::CompleteBipartite);
  CHECK(two_arc_classify(circ(6, {2, 4})).label == TwoArcLabel::NotTwoArcTransitive);
  CHECK(two_arc_classify(circ(6, {1, 5})).detail == "k-arc-transitive for every k >= 0");
}

TEST_CASE("two-arc labels are confirmed by 2-arc orbits") {
  for (Int n = 3; n <= 12; ++n)
    for (const auto& s : symmetric_connection_sets(n)) {
      const auto x = circ(n, s);
      if (!is_connected(x)) continue;
      const bool transitive = two_arc_orbit_count(x, brute_force_aut(x)) <= 1;
      CHECK(transitive == (two_arc_classify(x).label != TwoArcLabel::NotTwoArcTransitive));
    }
}

TEST_CASE("both_edge_transitive_classify examples") {
  CHECK(both_edge_transitive_classify(circ(13, test_support::squares_mod(13))) == BothEdgeTransitiveLabel::Paley);
  CHECK(both_edge_transitive_classify(circ(6, {2, 4})) == BothEdgeTransitiveLabel::mKn);
  CHECK_FALSE(both_edge_transitive_classify(circ(6, {1, 5})));
  CHECK(both_edge_transitive_classify(circ(6, {1, 3, 5})) == BothEdgeTransitiveLabel::ComplementMKn);
  CHECK(both_edge_transitive_classify(circ(5, {2, 3})) == BothEdgeTransitiveLabel::Paley);
}

TEST_CASE("both-edge-transitive classification holds up to n = 14") {
  for (Int n = 1; n <= 14; ++n)
    for (const auto& s : symmetric_connection_sets(n)) CHECK_NOTHROW(both_edge_transitive_classify(circ(n, s)));
}

TEST_CASE("noncyclic_regular_sufficient examples") {
  CHECK(noncyclic_regular_sufficient(circ(9, {3, 6})) == Int{3});
  CHECK_FALSE(noncyclic_regular_sufficient(circ(5, {1, 4})));
  CHECK(noncyclic_regular_sufficient(circ(8, {1, 3, 5, 7})) == Int{2});
}

TEST_CASE("is_normal_circulant examples") {
  CHECK(is_normal_circulant(circ(5, {1, 4})));
  CHECK_FALSE(is_normal_circulant(circ(4, {1, 2, 3})));
  CHECK(is_normal_circulant(circ(15, {1, 14})));
}

TEST_CASE("prime_power_dichotomy examples") {
  const Dichotomy c8 = prime_power_dichotomy(circ(8, {1, 7}));
  CHECK(c8.normal_sylow == true);
  CHECK(prime_power_dichotomy(circ(9, {3, 6})).wreath);
  const Dichotomy k4 = prime_power_dichotomy(circ(4, {1, 2, 3}));
  CHECK(k4.wreath);
  CHECK(k4.normal_sylow == false);
  CHECK_THROWS_AS(prime_power_dichotomy(circ(6, {1, 5})), InvalidArgument);
}

TEST_CASE("dichotomy never fails for n in 4, 8, 9 and sampled 16") {
  for (Int n : {4, 8, 9})
    for (const auto& s : symmetric_connection_sets(n)) CHECK_NOTHROW(prime_power_dichotomy(circ(n, s)));
  const auto sets = symmetric_connection_sets(16);
  for (std::size_t i = 0; i < sets.size(); i += 9) CHECK_NOTHROW(prime_power_dichotomy(circ(16, sets[i])));
}

namespace {

/// S = (S + H) \ K with S disjoint from H, where H and K are complementary
/// subgroups of orders b and n/b: the graph Y ≀ K̄_b minus b copies of Y.
bool is_deleted_wreath(const CirculantGraph& x) {
  const Int n = x.order();
  for (Int b : x.modulus().divisors()) {
    if (b == 1 || b == n || gcd(b, n / b) != 1) continue;
    std::vector<char> in_t(static_cast<std::size_t>(n), 0);
    for (Int s : x.set())
      for (Int h = 0; h < n; h += n / b) in_t[static_cast<std::size_t>((s + h) % n)] = 1;
    bool ok = true;
    bool removed = false;
    for (Int v = 1; v < n && ok; ++v) {
      const bool in_h = v % (n / b) == 0;
      const bool in_k = v % b == 0;
      const bool in_s = std::binary_search(x.set().begin(), x.set().end(), v);
      if (in_h && in_t[static_cast<std::size_t>(v)]) ok = false;
      if (in_s != (in_t[static_cast<std::size_t>(v)] && !in_k)) ok = false;
      removed |= in_k && in_t[static_cast<std::size_t>(v)];
    }
    if (ok && removed) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("arc-transitive square-free circulants fall in one of three cases") {
  for (Int n : {6, 10, 14, 15}) {
    for (const auto& s : symmetric_connection_sets(n)) {
      const auto x = circ(n, s);
      if (s.empty() || edge_orbit_count(x) != 1) continue;
      const bool complete = static_cast<Int>(s.size()) == n - 1;
      INFO(format_graph(x));
      CHECK((complete || is_normal_circulant(x) || is_wreath_decomposable(x) ||
             is_deleted_wreath(x)));
    }
  }
}
