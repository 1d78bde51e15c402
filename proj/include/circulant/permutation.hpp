#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "circulant/zmod.hpp"

namespace circulant {

/// A bijection of {0, ..., n-1} stored in image form.
///
/// Products read left to right: (a * b)(x) = b(a(x)), i.e. apply a first.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// Smallest moved point, or -1 for the identity.
  int first_moved_point() const noexcept;
  /// Non-trivial cycles, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const;
  /// Length-n cycle on all n points.
  bool is_full_cycle() const;
  Int order() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

Permutation power(const Permutation& g, Int k);

/// Cycle notation, e.g. "(0 1 2)(3 4)"; "()" for the identity.
std::string to_cycle_string(const Permutation& g);

/// i -> i + 1 mod n.
Permutation rotation(int n);
/// i -> -i mod n.
Permutation reflection(int n);
/// i -> a*i + b mod n. Throws NotAUnit when gcd(a, n) != 1 (n > 1).
Permutation affine(Int n, Int a, Int b);

/// Permutation acting as g on `support` only (g must preserve it) and
/// fixing every other point.
Permutation restrict_to(const Permutation& g, std::span<const int> support);

/// Transports g along the bijection relabel: returns r^-1 g r, i.e. the
/// map relabel[x] -> relabel[g(x)].
Permutation relabel(const Permutation& g, std::span<const int> relabelling);

}  // namespace circulant
