#pragma once

// Symbolic automorphism-group answers and their realization as permutation
// groups on n points.

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "circulant/permgroup.hpp"
#include "circulant/zmod.hpp"

namespace circulant {

/// How the points of a wreath product are numbered.
enum class WreathLayout {
  /// (u, v) -> u*|V| + v, the numbering of wreath_graph.
  Product,
  /// (u, v) -> u + |U|*v: blocks are the cosets of the order-|V| subgroup
  /// of Z_{|U||V|}, as in wreath_decomposition.
  Coset,
};

class GroupDescription {
 public:
  using Ptr = std::shared_ptr<const GroupDescription>;

  struct Symmetric {
    int degree;
  };
  /// {i -> a*i + b : a in multipliers, b in Z_n}.
  struct Holomorph {
    UnitSubgroup multipliers;
  };
  struct Wreath {
    Ptr outer;
    Ptr inner;
    WreathLayout layout;
  };
  /// left on Z_m x right on Z_{n/m}, glued by the CRT.
  struct DirectProduct {
    Ptr left;
    Ptr right;
  };
  struct GeneratedBy {
    int degree;
    std::vector<Permutation> generators;
  };
  using Node = std::variant<Symmetric, Holomorph, Wreath, DirectProduct, GeneratedBy>;

  static GroupDescription symmetric(int degree);
  static GroupDescription holomorph(UnitSubgroup multipliers);
  static GroupDescription wreath(GroupDescription outer, GroupDescription inner,
                                 WreathLayout layout = WreathLayout::Product);
  static GroupDescription direct_product(GroupDescription left, GroupDescription right);
  static GroupDescription generated_by(int degree, std::vector<Permutation> generators);
  static GroupDescription generated_by(const PermGroup& group);

  const Node& node() const noexcept { return node_; }
  int degree() const;

  /// Order from the closed formula of each node; GeneratedBy leaves fall back
  /// to a stabilizer chain.
  BigInt symbolic_order() const;

 private:
  explicit GroupDescription(Node node) : node_(std::move(node)) {}
  Node node_;
};

/// Explicit generators on degree() points. Throws InvalidArgument on
/// inconsistent degrees.
PermGroup realize(const GroupDescription& d);

/// Human-readable form, e.g. "S_2 ≀ S_3" or "{T_{a,b} : a ∈ {1,14}, b ∈ Z_15}".
std::string to_string(const GroupDescription& d);

/// Deterministic generating set of the unit subgroup (greedy over sorted
/// elements).
std::vector<Int> unit_generators(const UnitSubgroup& a);

}  // namespace circulant
