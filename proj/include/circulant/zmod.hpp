#pragma once

// Number theory over Z_n: factorization, the unit group and its subgroups,
// coset tests and CRT splitting.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace circulant {

using Int = std::int64_t;

/// Sorted, deduplicated set of residues.
using ResidueSet = std::vector<Int>;

struct PrimePower {
  Int prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer together with its prime factorization.
class Modulus {
 public:
  /// Factorizes n by trial division. Throws InvalidArgument when n < 1.
  explicit Modulus(Int n);

  Int value() const noexcept { return n_; }
  const std::vector<PrimePower>& prime_factors() const noexcept {
    return factors_;
  }
  std::vector<Int> primes() const;

  bool is_prime() const noexcept {
    return factors_.size() == 1 && factors_[0].exponent == 1;
  }
  bool is_squarefree() const noexcept;
  /// n = p^e for a single prime p and e >= 1.
  bool is_prime_power() const noexcept { return factors_.size() == 1; }
  Int euler_phi() const noexcept;
  /// All positive divisors in increasing order.
  std::vector<Int> divisors() const;

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.n_ == b.n_;
  }

 private:
  Int n_;
  std::vector<PrimePower> factors_;
};

Modulus factorize(Int n);

Int mod(Int x, Int n) noexcept;
Int gcd(Int a, Int b) noexcept;
bool is_unit(Int a, Int n) noexcept;
/// Units of Z_n in increasing order. Z_1^* is empty by convention.
ResidueSet units(Int n);

/// A subgroup of the multiplicative group Z_n^*.
class UnitSubgroup {
 public:
  /// The trivial subgroup {1} (empty when n = 1).
  explicit UnitSubgroup(Int n);

  Int modulus() const noexcept { return n_; }
  const ResidueSet& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Int a) const;

  friend bool operator==(const UnitSubgroup&, const UnitSubgroup&) = default;

 private:
  friend UnitSubgroup subgroup_generated(const Modulus&, std::span<const Int>);
  UnitSubgroup(Int n, ResidueSet elements)
      : n_(n), elements_(std::move(elements)) {}

  Int n_;
  ResidueSet elements_;
};

/// Smallest multiplicatively closed set containing gens and 1.
/// Throws NotAUnit naming the first generator not coprime to n.
UnitSubgroup subgroup_generated(const Modulus& modulus,
                                std::span<const Int> gens);

/// Every subgroup of Z_n^* exactly once, sorted by size then elements.
std::vector<UnitSubgroup> all_unit_subgroups(const Modulus& modulus);

/// True iff h*s mod n lies in S for every s in S and h in H.
bool is_union_of_cosets(std::span<const Int> set, const UnitSubgroup& h);

/// {a in Z_n^* : aS = S}.
UnitSubgroup multiplier_stabilizer(const Modulus& modulus,
                                   std::span<const Int> set);

/// {a*s mod n : s in S}, sorted.
ResidueSet scale(std::span<const Int> set, Int a, Int n);

/// x -> (x mod m, x mod n/m). Requires m | n and gcd(m, n/m) = 1.
std::pair<Int, Int> crt_split(const Modulus& modulus, Int m, Int x);
/// Inverse of crt_split.
Int crt_combine(const Modulus& modulus, Int m, std::pair<Int, Int> parts);

}  // namespace circulant
