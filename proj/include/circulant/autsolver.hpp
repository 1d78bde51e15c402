#pragma once

// Automorphism groups of undirected uncoloured circulants: prime order,
// order pq, and square-free order, plus a dispatcher.

#include <map>
#include <string>
#include <vector>

#include "circulant/description.hpp"
#include "circulant/graph.hpp"
#include "circulant/oracle.hpp"

namespace circulant {

/// Aut(X(p;S)) for prime p: S_p when S is empty or all of Z_p^*, otherwise
/// the affine maps i -> a*i + b with aS = S.
GroupDescription aut_prime(const CirculantGraph& x);

/// Aut(X) for n = pq with p < q distinct primes: symmetric, a wreath product
/// of two prime-order answers, S_p x A_2 (or A_1 x S_q), or a holomorph
/// subgroup.
GroupDescription aut_pq(const CirculantGraph& x);

/// Local group on the Z_p factor of a square-free n.
struct LocalGroup {
  Int prime;
  PermGroup group;
  /// True when |E_p| reached p(p-1) and E_p was replaced by S_p.
  bool promoted;
};

/// E_p = {i -> a*i + b : a in A, a = 1 mod n/p, b in (n/p)Z_n}, promoted to
/// S_p on the Z_p coordinate when its order is p(p-1).
LocalGroup compute_local_group(const CirculantGraph& x, const UnitSubgroup& multipliers,
                               Int p);

struct PrimeMerge {
  /// Classes of the relation on symmetric primes, each sorted; classes
  /// ordered by smallest prime.
  std::vector<std::vector<Int>> classes;
  /// Products m_i of the primes in each class.
  std::vector<Int> class_products;
  /// E_m for every divisor m of n.
  std::map<Int, PermGroup> divisor_groups;
};

/// Joins symmetric primes p, q whenever the product of swaps
/// n/p + k*pq <-> n/q + k*pq (0 <= k < n/pq) is an automorphism, then
/// builds E_m for every divisor m from symmetric class factors and the
/// remaining local groups.
PrimeMerge merge_symmetric_primes(const CirculantGraph& x,
                                  const std::vector<LocalGroup>& local_groups);

struct SquareFreeWorkspace {
  UnitSubgroup multipliers;                    ///< A
  std::vector<LocalGroup> local_groups;        ///< E_p, by increasing p
  std::vector<Int> symmetric_primes;           ///< primes with E_p = S_p
  PrimeMerge merge;                            ///< classes and E_m
  std::map<Int, UnitSubgroup> divisor_multipliers;  ///< A_m
  std::map<Int, PermGroup> extended_groups;    ///< E_m' = <E_m, A_m>
  PermGroup group;                             ///< running answer G
};

/// Runs the square-free algorithm and keeps every intermediate group.
SquareFreeWorkspace solve_squarefree(const CirculantGraph& x);

/// Aut(X) for square-free composite n, as an explicit generating set.
GroupDescription aut_squarefree(const CirculantGraph& x);

enum class Method { Auto, Prime, Pq, SquareFree, Oracle };

std::string to_string(Method m);
Method parse_method(const std::string& text);

struct SolveOptions {
  Method method = Method::Auto;
  /// Largest order the dispatcher hands to the brute-force oracle.
  int oracle_vertex_bound = 32;
  SearchBudget budget;
  /// For n = pq, compare the square-free answer with aut_pq.
  bool cross_check_pq = true;
};

struct Solution {
  GroupDescription description;
  Method method;
};

/// Routes to the matching algorithm; non-square-free orders fall back to the
/// oracle up to the vertex bound and raise UnsupportedOrder beyond it.
Solution aut(const CirculantGraph& x, const SolveOptions& options = {});

}  // namespace circulant
