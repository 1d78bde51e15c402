#include "circulant/classify.hpp"

#include <algorithm>

#include "circulant/autsolver.hpp"
#include "circulant/errors.hpp"

namespace circulant {

namespace {

bool is_complete(const CirculantGraph& x) {
  return static_cast<Int>(x.set().size()) == x.order() - 1;
}

ResidueSet odd_residues(Int n) {
  ResidueSet out;
  for (Int s = 1; s < n; s += 2) out.push_back(s);
  return out;
}

/// S = H \ {0} for the additive subgroup H of order d.
bool is_subgroup_minus_zero(const ResidueSet& set, Int n, Int d) {
  ResidueSet h;
  for (Int s = n / d; s < n; s += n / d) h.push_back(s);
  return h == set;
}

bool is_subgroup_complement(const ResidueSet& set, Int n, Int d) {
  ResidueSet rest;
  for (Int s = 1; s < n; ++s)
    if (s % (n / d) != 0) rest.push_back(s);
  return rest == set;
}

}  // namespace

bool edge_transitive_prime(const CirculantGraph& x) {
  if (!x.modulus().is_prime())
    throw InvalidArgument("edge_transitive_prime needs prime order, got " +
                          std::to_string(x.order()));
  const ResidueSet& s = x.set();
  if (s.empty() || x.order() == 2) return true;
  for (const auto& h : all_unit_subgroups(x.modulus())) {
    if (h.size() % 2 != 0 || h.size() != s.size()) continue;
    if (scale(h.elements(), s.front(), x.order()) == s) return true;
  }
  return false;
}

std::string to_string(TwoArcLabel label) {
  switch (label) {
    case TwoArcLabel::Complete: return "Complete";
    case TwoArcLabel::CompleteBipartite: return "CompleteBipartite";
    case TwoArcLabel::CompleteBipartiteMinusFactor: return "CompleteBipartiteMinusFactor";
    case TwoArcLabel::Cycle: return "Cycle";
    case TwoArcLabel::NotTwoArcTransitive: return "NotTwoArcTransitive";
  }
  return "NotTwoArcTransitive";
}

TwoArcClass two_arc_classify(const CirculantGraph& x) {
  if (x.directed()) throw InvalidArgument("two_arc_classify needs an undirected graph");
  const Int n = x.order();
  const ResidueSet& s = x.set();
  if (!is_connected(x)) return {TwoArcLabel::NotTwoArcTransitive, "disconnected"};
  if (is_complete(x)) return {TwoArcLabel::Complete, "exactly 2-arc-transitive"};
  if (n % 2 == 0) {
    ResidueSet odd = odd_residues(n);
    if (s == odd) return {TwoArcLabel::CompleteBipartite, "exactly 3-arc-transitive"};
    if (n >= 10 && (n / 2) % 2 == 1) {
      odd.erase(std::find(odd.begin(), odd.end(), n / 2));
      if (s == odd)
        return {TwoArcLabel::CompleteBipartiteMinusFactor, "exactly 2-arc-transitive"};
    }
  }
  if (s.size() == 2) return {TwoArcLabel::Cycle, "k-arc-transitive for every k >= 0"};
  return {TwoArcLabel::NotTwoArcTransitive, "no family matches"};
}

std::string to_string(BothEdgeTransitiveLabel label) {
  switch (label) {
    case BothEdgeTransitiveLabel::mKn: return "mKn";
    case BothEdgeTransitiveLabel::ComplementMKn: return "complement_mKn";
    case BothEdgeTransitiveLabel::Paley: return "Paley";
  }
  return "mKn";
}

std::optional<BothEdgeTransitiveLabel> both_edge_transitive_classify(const CirculantGraph& x, const SearchBudget& budget) {
  if (x.directed() || x.coloured())
    throw InvalidArgument("both_edge_transitive_classify needs an undirected uncoloured graph");
  const CirculantGraph co = complement(x);
  if (edge_orbit_count(x, budget) > 1 || edge_orbit_count(co, budget) > 1) return std::nullopt;

  const Int n = x.order();
  const ResidueSet& s = x.set();
  for (Int d : x.modulus().divisors())
    if (is_subgroup_minus_zero(s, n, d)) return BothEdgeTransitiveLabel::mKn;
  for (Int d : x.modulus().divisors())
    if (is_subgroup_complement(s, n, d)) return BothEdgeTransitiveLabel::ComplementMKn;
  if (x.modulus().is_prime() && n % 4 == 1) {
    ResidueSet squares;
    for (Int a = 1; a < n; ++a) squares.push_back(a * a % n);
    std::sort(squares.begin(), squares.end());
    squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
    // Up to isomorphism: the non-squares give the same graph.
    for (Int a : units(n))
      if (scale(squares, a, n) == s) return BothEdgeTransitiveLabel::Paley;
  }
  throw ClassificationViolation(format_graph(x) +
                                " and its complement are edge-transitive but no family matches");
}

std::optional<Int> noncyclic_regular_sufficient(const CirculantGraph& x) {
  const Int g = gcd(x.order(), static_cast<Int>(multiplier_stabilizer(x.modulus(), x.set()).size()));
  if (g <= 1) return std::nullopt;
  return factorize(g).primes().front();
}

bool is_normal_circulant(const CirculantGraph& x, const SearchBudget& budget) {
  SolveOptions options;
  options.budget = budget;
  options.oracle_vertex_bound = budget.max_vertices;
  const PermGroup group = realize(aut(x, options).description);
  const int n = static_cast<int>(x.order());
  const Permutation rho = rotation(n);
  for (const auto& g : group.generators()) {
    const Permutation conjugate = g.inverse() * rho * g;
    const int shift = conjugate(0);
    for (int v = 0; v < n; ++v)
      if (conjugate(v) != (v + shift) % n) return false;
  }
  return true;
}

bool is_wreath_decomposable(const CirculantGraph& x) {
  for (Int d : x.modulus().divisors())
    if (d > 1 && d < x.order() && wreath_decomposition(x, d)) return true;
  return false;
}

Dichotomy prime_power_dichotomy(const CirculantGraph& x, const SearchBudget& budget) {
  const Modulus& modulus = x.modulus();
  if (!modulus.is_prime_power() || modulus.value() < 2)
    throw InvalidArgument("prime_power_dichotomy needs a prime power order, got " +
                          std::to_string(x.order()));
  const Int p = modulus.primes().front();
  Dichotomy out{is_wreath_decomposable(x), std::nullopt};

  const PermGroup group = brute_force_aut(x, budget);
  BigInt order = group.order();
  BigInt sylow = 1;
  while (order % p == 0) {
    order /= p;
    sylow *= p;
  }
  if (order == 1) {
    out.normal_sylow = true;
  } else if (group.order() <= budget.max_group_order_for_enumeration) {
    // A Sylow subgroup is normal iff it holds every p-element.
    BigInt p_elements = 0;
    group.chain().for_each_element([&](const Permutation& g) {
      Int k = g.order();
      while (k % p == 0) k /= p;
      if (k == 1) ++p_elements;
    });
    out.normal_sylow = p_elements == sylow;
  }

  if (!out.wreath && out.normal_sylow == false)
    throw DichotomyViolation(format_graph(x) + " is neither a wreath product nor has a normal Sylow " +
                             std::to_string(p) + "-subgroup");
  if (!out.wreath && !out.normal_sylow)
    throw BudgetExceeded("automorphism group of " + format_graph(x) + " too large to enumerate");
  return out;
}

}  // namespace circulant
