#pragma once

// Circulant graphs X(n;S), dense (di)graphs, and the graph-level
// constructions the solvers rely on: induced subgroup graphs, complement,
// wreath (lexicographic) product and wreath decomposition.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "circulant/zmod.hpp"

namespace circulant {

/// Colour label of an arc. Zero is reserved for "no arc".
using Colour = int;

/// The difference set S of a circulant, with optional arc colours.
struct ConnectionSet {
  Int n = 1;
  ResidueSet elements;
  /// Colour per element; elements missing from the map have colour 1.
  std::map<Int, Colour> colours;
  bool directed = false;

  bool contains(Int s) const;
  Colour colour_of(Int s) const;
  bool coloured() const { return !colours.empty(); }

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;
};

class CirculantGraph {
 public:
  CirculantGraph(Modulus modulus, ConnectionSet connection);

  Int order() const noexcept { return modulus_.value(); }
  const Modulus& modulus() const noexcept { return modulus_; }
  const ConnectionSet& connection() const noexcept { return connection_; }
  const ResidueSet& set() const noexcept { return connection_.elements; }
  bool directed() const noexcept { return connection_.directed; }
  bool coloured() const noexcept { return connection_.coloured(); }

  /// Arc i -> j exists iff (j - i) mod n lies in S.
  bool adjacent(Int i, Int j) const;
  /// Colour of arc i -> j, or 0 when absent.
  Colour arc(Int i, Int j) const;

  friend bool operator==(const CirculantGraph& a, const CirculantGraph& b) {
    return a.connection_ == b.connection_;
  }

 private:
  Modulus modulus_;
  ConnectionSet connection_;
  std::vector<char> member_;
};

/// Validating constructor. Throws RangeViolation for entries outside
/// [1, n-1] and SymmetryViolation for undirected sets with s but not -s.
CirculantGraph new_circulant(Int n, std::span<const Int> set,
                             bool directed = false);
CirculantGraph new_circulant(Int n, std::span<const Int> set,
                             const std::map<Int, Colour>& colours,
                             bool directed);

/// Loopless (di)graph on {0, ..., order-1} with coloured arcs.
class DenseGraph {
 public:
  DenseGraph(int order, bool directed);

  int order() const noexcept { return order_; }
  bool directed() const noexcept { return directed_; }
  Colour arc(int i, int j) const { return arcs_[index(i, j)]; }
  bool adjacent(int i, int j) const { return arc(i, j) != 0; }
  /// Sets arc i -> j (and j -> i when undirected).
  void set_arc(int i, int j, Colour c = 1);
  /// Undirected edges, or arcs for digraphs.
  std::size_t edge_count() const;

  friend bool operator==(const DenseGraph&, const DenseGraph&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) +
           static_cast<std::size_t>(j);
  }
  int order_;
  bool directed_;
  std::vector<Colour> arcs_;
};

DenseGraph to_dense(const CirculantGraph& x);
DenseGraph empty_graph(int order, bool directed = false);
DenseGraph complete_graph(int order);

/// True iff images[] maps arcs to arcs of equal colour and non-arcs to
/// non-arcs.
bool preserves_adjacency(const DenseGraph& x, std::span<const int> images);
bool preserves_adjacency(const CirculantGraph& x, std::span<const int> images);

/// Lexicographic product: vertex (x, y) sits at index x*|Y| + y.
DenseGraph wreath_graph(const DenseGraph& outer, const DenseGraph& inner);

/// Induced subgraph on {0, m, 2m, ...} relabelled km -> k.
CirculantGraph subgroup_induced(const CirculantGraph& x, Int m);

/// Connection set {1, ..., n-1} \ S. Undirected and uncoloured only.
CirculantGraph complement(const CirculantGraph& x);

/// gcd(S u {n}) = 1 for undirected graphs; weak connectivity for digraphs.
bool is_connected(const CirculantGraph& x);

struct WreathDecomposition {
  CirculantGraph outer;  ///< quotient by the order-d subgroup, n/d vertices
  CirculantGraph inner;  ///< induced graph on the order-d subgroup
};

/// Splits X as outer ≀ inner along the order-d subgroup H = (n/d)Z_n when
/// S \ H is a union of H-cosets. The isomorphism (x, y) -> x + (n/d) y is
/// re-checked on the full adjacency before returning.
std::optional<WreathDecomposition> wreath_decomposition(const CirculantGraph& x,
                                                        Int d);

/// Parses "n;s1,s2,..." (an empty list after ';' is the empty set).
CirculantGraph parse_graph(std::string_view text, bool directed = false);
std::string format_graph(const CirculantGraph& x);

/// Parses a comma separated list of integers; "" is the empty list.
std::vector<Int> parse_int_list(std::string_view text);

}  // namespace circulant
