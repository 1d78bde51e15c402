#include "circulant/zmod.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "circulant/errors.hpp"

namespace circulant {

Modulus::Modulus(Int n) : n_(n) {
  if (n < 1) throw InvalidArgument("modulus must be positive, got " +
                                   std::to_string(n));
  Int rest = n;
  for (Int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    factors_.push_back({p, e});
  }
  if (rest > 1) factors_.push_back({rest, 1});
}

std::vector<Int> Modulus::primes() const {
  std::vector<Int> out;
  for (const auto& f : factors_) out.push_back(f.prime);
  return out;
}

bool Modulus::is_squarefree() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

Int Modulus::euler_phi() const noexcept {
  Int phi = n_;
  for (const auto& f : factors_) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

std::vector<Int> Modulus::divisors() const {
  std::vector<Int> out{1};
  for (const auto& f : factors_) {
    const std::size_t count = out.size();
    Int power = 1;
    for (int e = 1; e <= f.exponent; ++e) {
      power *= f.prime;
      for (std::size_t i = 0; i < count; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Modulus factorize(Int n) { return Modulus(n); }

Int mod(Int x, Int n) noexcept {
  const Int r = x % n;
  return r < 0 ? r + n : r;
}

Int gcd(Int a, Int b) noexcept { return std::gcd(a, b); }

bool is_unit(Int a, Int n) noexcept {
  return n > 1 && std::gcd(mod(a, n), n) == 1;
}

ResidueSet units(Int n) {
  ResidueSet out;
  for (Int a = 1; a < n; ++a)
    if (std::gcd(a, n) == 1) out.push_back(a);
  return out;
}

UnitSubgroup::UnitSubgroup(Int n) : n_(n) {
  if (n > 1) elements_.push_back(1);
}

bool UnitSubgroup::contains(Int a) const {
  return std::binary_search(elements_.begin(), elements_.end(), mod(a, n_));
}

UnitSubgroup subgroup_generated(const Modulus& modulus,
                                std::span<const Int> gens) {
  const Int n = modulus.value();
  if (n == 1) {
    if (!gens.empty()) throw NotAUnit(gens.front(), n);
    return UnitSubgroup(1);
  }
  std::vector<Int> reduced;
  for (Int g : gens) {
    if (!is_unit(g, n)) throw NotAUnit(g, n);
    reduced.push_back(mod(g, n));
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Int> frontier{1};
  seen[1] = 1;
  while (!frontier.empty()) {
    const Int x = frontier.back();
    frontier.pop_back();
    for (Int g : reduced) {
      const Int y = x * g % n;
      if (!seen[y]) {
        seen[y] = 1;
        frontier.push_back(y);
      }
    }
  }
  ResidueSet elements;
  for (Int a = 1; a < n; ++a)
    if (seen[a]) elements.push_back(a);
  return UnitSubgroup(n, std::move(elements));
}

std::vector<UnitSubgroup> all_unit_subgroups(const Modulus& modulus) {
  const Int n = modulus.value();
  auto less = [](const UnitSubgroup& a, const UnitSubgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.elements() < b.elements();
  };
  std::vector<UnitSubgroup> found;
  auto insert = [&](UnitSubgroup h) {
    auto it = std::lower_bound(found.begin(), found.end(), h, less);
    if (it != found.end() && *it == h) return false;
    found.insert(it, std::move(h));
    return true;
  };
  for (Int a : units(n)) {
    const Int g[] = {a};
    insert(subgroup_generated(modulus, g));
  }
  if (found.empty()) found.push_back(UnitSubgroup(n));
  // Every subgroup is the join of cyclic ones; close under pairwise joins.
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = found;
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<Int> gens = snapshot[i].elements();
        gens.insert(gens.end(), snapshot[j].elements().begin(),
                    snapshot[j].elements().end());
        if (insert(subgroup_generated(modulus, gens))) grew = true;
      }
    }
  }
  return found;
}

bool is_union_of_cosets(std::span<const Int> set, const UnitSubgroup& h) {
  const Int n = h.modulus();
  const std::set<Int> members(set.begin(), set.end());
  for (Int s : set)
    for (Int a : h.elements())
      if (!members.count(mod(a * s, n))) return false;
  return true;
}

ResidueSet scale(std::span<const Int> set, Int a, Int n) {
  ResidueSet out;
  out.reserve(set.size());
  for (Int s : set) out.push_back(mod(a * s, n));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

UnitSubgroup multiplier_stabilizer(const Modulus& modulus,
                                   std::span<const Int> set) {
  const Int n = modulus.value();
  ResidueSet sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Int> fixing;
  for (Int a : units(n))
    if (scale(sorted, a, n) == sorted) fixing.push_back(a);
  return subgroup_generated(modulus, fixing);
}

namespace {

void check_split(const Modulus& modulus, Int m) {
  const Int n = modulus.value();
  if (m < 1 || n % m != 0)
    throw InvalidArgument(std::to_string(m) + " does not divide " +
                          std::to_string(n));
  if (std::gcd(m, n / m) != 1)
    throw InvalidArgument("CRT split of " + std::to_string(n) + " at " +
                          std::to_string(m) + " is not coprime");
}

}  // namespace

std::pair<Int, Int> crt_split(const Modulus& modulus, Int m, Int x) {
  check_split(modulus, m);
  const Int n = modulus.value();
  const Int r = mod(x, n);
  return {r % m, r % (n / m)};
}

Int crt_combine(const Modulus& modulus, Int m, std::pair<Int, Int> parts) {
  check_split(modulus, m);
  const Int n = modulus.value();
  const Int k = n / m;
  // x = a + m*t with a + m*t = b (mod k); solve for t by scanning.
  const Int a = mod(parts.first, m);
  const Int b = mod(parts.second, k);
  for (Int t = 0; t < k; ++t) {
    const Int x = a + m * t;
    if (x % k == b) return x;
  }
  throw InvalidArgument("CRT combine failed");  // unreachable when coprime
}

}  // namespace circulant
