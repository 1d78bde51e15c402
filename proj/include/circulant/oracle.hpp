#pragma once

// Brute-force ground truth: automorphism groups by backtracking search,
// isomorphism of circulants, the CI property, regular subgroups, and orbit
// counts on edges and 2-arcs.

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circulant/graph.hpp"
#include "circulant/permgroup.hpp"

namespace circulant {

struct SearchBudget {
  int max_vertices = 32;
  BigInt max_group_order_for_enumeration = 1000000;
  std::optional<std::chrono::duration<double>> time_limit;
};

/// Automorphism group of a (coloured) (di)graph by individualization and
/// colour refinement. Generators form a strong generating set for the base
/// 0, 1, ..., n-1 and are sorted by image array.
PermGroup brute_force_aut(const DenseGraph& x, const SearchBudget& budget = {});
PermGroup brute_force_aut(const CirculantGraph& x, const SearchBudget& budget = {});

/// Some isomorphism from x to y (as image array on x's vertices), or
/// nothing. Tries multipliers a with aS = S' first.
std::optional<Permutation> are_isomorphic(const CirculantGraph& x, const CirculantGraph& y,
                                          const SearchBudget& budget = {});
std::optional<Permutation> find_isomorphism(const DenseGraph& x, const DenseGraph& y,
                                            const SearchBudget& budget = {});

/// Every symmetric connection set on n points, as inverse-pair bitmasks in
/// increasing mask order.
std::vector<ResidueSet> symmetric_connection_sets(Int n);

struct CiReport {
  bool ci = true;
  /// S' isomorphic to S but not a multiple of it.
  std::optional<ResidueSet> witness;
};

/// Exhaustive CI check of one undirected circulant.
CiReport is_ci_graph(const CirculantGraph& x, const SearchBudget& budget = {});

/// CI via conjugacy in Aut(X) of the cyclic subgroups generated by its
/// n-cycles.
bool ci_via_conjugacy(const CirculantGraph& x, const SearchBudget& budget = {});

struct CiGroupStatus {
  bool dci;
  bool ci;
};
/// Classification of Z_n: DCI iff n in {k, 2k, 4k} with k odd squarefree;
/// CI iff n in {8, 9, 18} or DCI.
CiGroupStatus is_ci_group(Int n);

struct RegularSubgroup {
  PermGroup group;
  bool cyclic;
};

/// All regular subgroups of g of order n, found by closure over
/// semiregular elements. Needs |g| <= order_limit and n <= degree_limit.
std::vector<RegularSubgroup> regular_subgroups(const PermGroup& g, int n,
                                               const BigInt& order_limit = 10000,
                                               int degree_limit = 12);

/// A noncyclic regular subgroup of Aut(X), or nothing. Uses
/// regular_subgroups when Aut(X) is small and otherwise searches for an
/// isomorphism X = Cay(H, T) over the noncyclic groups H of order n
/// (n <= 12).
std::optional<PermGroup> find_noncyclic_regular_subgroup(const CirculantGraph& x,
                                                         const SearchBudget& budget = {});

/// Orbits of the group on undirected edges (arcs for digraphs).
int edge_orbit_count(const CirculantGraph& x, const PermGroup& aut);
int edge_orbit_count(const CirculantGraph& x, const SearchBudget& budget = {});

/// Orbits of the group on 2-arcs (v1, v2, v3), v1 ~ v2 ~ v3, v1 != v3.
int two_arc_orbit_count(const CirculantGraph& x, const PermGroup& aut);

}  // namespace circulant
