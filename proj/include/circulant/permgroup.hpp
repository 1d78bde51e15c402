#pragma once

// Permutation groups given by generators, backed by a deterministic
// stabilizer chain (Schreier-Sims with Knuth's incremental closure).

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "circulant/permutation.hpp"

namespace circulant {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(Int n);

/// Base, strong generators and transversals of a permutation group.
///
/// Base points are chosen as the smallest point moved by the element that
/// forces a new level, so the chain depends only on the generator order.
class StabilizerChain {
 public:
  struct Level {
    int base_point = 0;
    std::vector<Permutation> generators;
    std::vector<int> orbit;
    /// transversal[x] maps base_point to x; empty when x is not in the orbit.
    std::vector<std::optional<Permutation>> transversal;
    std::vector<std::optional<Permutation>> inverse_transversal;
  };

  explicit StabilizerChain(int degree) : degree_(degree) {}

  /// Ensures g is in the group; extends the chain when it is not.
  void add(const Permutation& g) { add_at(g, 0); }

  /// Residue of sifting g and the level where sifting stopped.
  std::pair<Permutation, std::size_t> sift(const Permutation& g,
                                           std::size_t from = 0) const;
  bool contains(const Permutation& g) const;
  BigInt order() const;

  int degree() const noexcept { return degree_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::vector<int> base() const;
  std::vector<Permutation> strong_generators() const;

  /// Visits every element exactly once (caller bounds the order).
  void for_each_element(const std::function<void(const Permutation&)>& visit) const;

 private:
  void add_at(const Permutation& g, std::size_t level);
  void extend_orbit(std::size_t level, int point, const Permutation& via);

  int degree_;
  std::vector<Level> levels_;
};

class PermGroup {
 public:
  /// Trivial group of the given degree.
  explicit PermGroup(int degree);
  /// Throws DegreeMismatch if a generator has the wrong degree. Identity
  /// generators are dropped.
  PermGroup(int degree, std::vector<Permutation> generators);

  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  /// Built once, on first use; thread safe.
  const StabilizerChain& chain() const;
  BigInt order() const { return chain().order(); }
  bool contains(const Permutation& g) const;
  std::vector<int> base() const { return chain().base(); }

  std::vector<int> orbit(int point) const;
  /// Orbits sorted by smallest element.
  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;

  /// Every element, ordered lexicographically by image array.
  /// Throws BudgetExceeded when the order exceeds limit.
  std::vector<Permutation> elements(const BigInt& limit) const;

  /// Same group plus g (g is appended only when it is not yet a member).
  PermGroup with_generator(const Permutation& g) const;

 private:
  struct ChainCache {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };

  int degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<ChainCache> cache_;
};

/// Equal orders and mutual generator membership.
bool same_group(const PermGroup& a, const PermGroup& b);

/// Every generator of b lies in a.
bool is_subgroup(const PermGroup& b, const PermGroup& a);

PermGroup symmetric_group(int degree);
PermGroup cyclic_group(int degree);
PermGroup dihedral_group(int degree);

/// Partition of the points into equal-sized cells.
struct BlockSystem {
  int degree = 0;
  /// Each block sorted; blocks sorted by their smallest point.
  std::vector<std::vector<int>> blocks;

  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  bool is_trivial() const {
    return blocks.size() <= 1 || block_size() <= 1;
  }
  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

/// Finest block system whose block through seed.first contains
/// seed.second. Throws InvalidArgument for intransitive groups.
BlockSystem minimal_blocks(const PermGroup& g, std::pair<int, int> seed);

/// True iff every generator maps each block onto a block.
bool is_block_system(const PermGroup& g, const BlockSystem& system);

/// Partition of Z_n into cosets of the order-k subgroup (n/k)Z_n.
BlockSystem coset_block_system(int n, int k);

/// Coset systems (by increasing block size k) invariant under g. Requires
/// the rotation i -> i + 1 to be in g.
std::vector<BlockSystem> cyclic_block_systems(const PermGroup& g);

bool is_primitive(const PermGroup& g);

/// H ≀ K on U x V with (u, v) at index u*|V| + v.
PermGroup wreath_group(const PermGroup& outer, const PermGroup& inner);

/// H x K on Z_{mk} acting coordinate-wise through x -> (x mod m, x mod k).
PermGroup direct_product_crt(const PermGroup& left, const PermGroup& right);

/// True iff some x in g satisfies x^-1 a x = b, by enumerating g.
/// Throws BudgetExceeded when |g| > limit.
bool are_conjugate(const PermGroup& g, const Permutation& a,
                   const Permutation& b, const BigInt& limit = BigInt(1000000));

/// Conjugate every generator along a relabelling of the points.
PermGroup relabel(const PermGroup& g, std::span<const int> relabelling);

}  // namespace circulant
