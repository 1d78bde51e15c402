#pragma once

// Predicates from the classification theorems for circulants: edge
// transitivity at prime order, 2-arc-transitive families, graphs whose
// complement is also edge-transitive, noncyclic regular subgroups, normal
// circulants, and the prime-power dichotomy.

#include <optional>
#include <string>

#include "circulant/graph.hpp"
#include "circulant/oracle.hpp"

namespace circulant {

/// True iff S is empty or a single coset of an even-order subgroup of Z_p^*.
/// Throws InvalidArgument for non-prime order.
bool edge_transitive_prime(const CirculantGraph& x);

enum class TwoArcLabel {
  Complete,
  CompleteBipartite,
  CompleteBipartiteMinusFactor,
  Cycle,
  NotTwoArcTransitive,
};

struct TwoArcClass {
  TwoArcLabel label;
  std::string detail;
};

std::string to_string(TwoArcLabel label);

/// Matches X against K_n, K_{n/2,n/2}, K_{n/2,n/2} minus a 1-factor
/// (n >= 10, n/2 odd) and C_n. Disconnected graphs are never 2-arc-transitive.
TwoArcClass two_arc_classify(const CirculantGraph& x);

enum class BothEdgeTransitiveLabel { mKn, ComplementMKn, Paley };
std::string to_string(BothEdgeTransitiveLabel label);

/// When X and its complement are both edge-transitive, the family X lies in.
/// Nothing when the hypothesis fails. Throws ClassificationViolation if the
/// hypothesis holds and no family matches.
std::optional<BothEdgeTransitiveLabel> both_edge_transitive_classify(const CirculantGraph& x, const SearchBudget& budget = {});

/// Smallest prime dividing gcd(n, |Z_n^*(S)|), if any.
std::optional<Int> noncyclic_regular_sufficient(const CirculantGraph& x);

/// True iff <rho> is normal in Aut(X). Aut(X) comes from the solvers, or
/// the oracle for orders they do not cover.
bool is_normal_circulant(const CirculantGraph& x, const SearchBudget& budget = {});

struct Dichotomy {
  bool wreath;
  /// Nothing when the group was too large to enumerate; only possible when
  /// `wreath` already holds.
  std::optional<bool> normal_sylow;
};

/// For n = p^e: whether X splits as a wreath product and whether a Sylow
/// p-subgroup of Aut(X) is normal. Throws DichotomyViolation when neither
/// holds and BudgetExceeded when the answer cannot be settled.
Dichotomy prime_power_dichotomy(const CirculantGraph& x, const SearchBudget& budget = {});

/// Whether some 1 < d < n with d | n gives a wreath decomposition.
bool is_wreath_decomposable(const CirculantGraph& x);

}  // namespace circulant
