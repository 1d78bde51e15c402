#include "circulant/autsolver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "circulant/errors.hpp"

namespace circulant {

namespace {

void require_plain(const CirculantGraph& x) {
  if (x.directed() || x.coloured())
    throw InvalidArgument("automorphism solvers need an undirected uncoloured graph");
}

bool is_empty_or_complete(const CirculantGraph& x) {
  return x.set().empty() || static_cast<Int>(x.set().size()) == x.order() - 1;
}

/// g acting on the Z_d coordinate of Z_n = Z_d x Z_{n/d}, identically on
/// every fibre.
Permutation lift_coordinate(const Modulus& modulus, Int d, const Permutation& g) {
  const Int n = modulus.value();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (Int x = 0; x < n; ++x) {
    const auto [a, b] = crt_split(modulus, d, x);
    images[static_cast<std::size_t>(x)] =
        static_cast<int>(crt_combine(modulus, d, {g(static_cast<int>(a)), b}));
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> lift_symmetric(const Modulus& modulus, Int d) {
  std::vector<Permutation> out;
  const PermGroup sd = symmetric_group(static_cast<int>(d));
  for (const auto& g : sd.generators())
    out.push_back(lift_coordinate(modulus, d, g));
  return out;
}

/// Translation by `step` restricted to the points of `support`.
Permutation partial_translation(int n, Int step, std::span<const int> support) {
  return restrict_to(affine(n, 1, step), support);
}

void require_automorphisms(const CirculantGraph& x, const std::vector<Permutation>& gens,
                           const char* what) {
  for (const auto& g : gens)
    if (!preserves_adjacency(x, g.images()))
      throw std::logic_error(std::string(what) + " contains a non-automorphism");
}

UnitSubgroup multipliers_fixing_cofactor(const UnitSubgroup& a, Int n, Int cofactor) {
  std::vector<Int> keep;
  for (Int x : a.elements())
    if (mod(x - 1, cofactor) == 0) keep.push_back(x);
  return subgroup_generated(Modulus(n), keep);
}

std::pair<Int, Int> two_primes(const Modulus& modulus) {
  const auto& f = modulus.prime_factors();
  if (f.size() != 2 || f[0].exponent != 1 || f[1].exponent != 1)
    throw InvalidArgument("order " + std::to_string(modulus.value()) +
                          " is not a product of two distinct primes");
  return {f[0].prime, f[1].prime};
}

}  // namespace

GroupDescription aut_prime(const CirculantGraph& x) {
  require_plain(x);
  if (!x.modulus().is_prime())
    throw InvalidArgument("aut_prime needs prime order, got " + std::to_string(x.order()));
  if (is_empty_or_complete(x)) return GroupDescription::symmetric(static_cast<int>(x.order()));
  return GroupDescription::holomorph(multiplier_stabilizer(x.modulus(), x.set()));
}

GroupDescription aut_pq(const CirculantGraph& x) {
  require_plain(x);
  const auto [p, q] = two_primes(x.modulus());
  const Int n = x.order();
  if (is_empty_or_complete(x)) return GroupDescription::symmetric(static_cast<int>(n));

  // A_1 lives on the order-p subgroup qZ_n, A_2 on the order-q subgroup pZ_n.
  const auto a1 = [&] { return aut_prime(subgroup_induced(x, q)); };
  const auto a2 = [&] { return aut_prime(subgroup_induced(x, p)); };

  auto subgroup_points = [&](Int step) {
    std::vector<int> pts;
    for (Int v = 0; v < n; v += step) pts.push_back(static_cast<int>(v));
    return pts;
  };
  const auto on_p_multiples = subgroup_points(p);
  if (preserves_adjacency(x, partial_translation(static_cast<int>(n), p, on_p_multiples).images()))
    return GroupDescription::wreath(a1(), a2(), WreathLayout::Coset);
  const auto on_q_multiples = subgroup_points(q);
  if (preserves_adjacency(x, partial_translation(static_cast<int>(n), q, on_q_multiples).images()))
    return GroupDescription::wreath(a2(), a1(), WreathLayout::Coset);

  const UnitSubgroup a = multiplier_stabilizer(x.modulus(), x.set());
  // The factor beside S_r is the affine group of the other coordinate, with
  // multipliers read off A; S_s itself when they exhaust Z_s^*.
  auto factor = [&](Int r, Int s) {
    std::vector<Int> residues;
    for (Int u : a.elements())
      if (mod(u - 1, r) == 0) residues.push_back(mod(u, s));
    const UnitSubgroup projected = subgroup_generated(Modulus(s), residues);
    if (static_cast<Int>(projected.size()) == s - 1)
      return GroupDescription::symmetric(static_cast<int>(s));
    return GroupDescription::holomorph(projected);
  };
  if (compute_local_group(x, a, p).promoted)
    return GroupDescription::direct_product(GroupDescription::symmetric(static_cast<int>(p)),
                                            factor(p, q));
  if (compute_local_group(x, a, q).promoted)
    return GroupDescription::direct_product(factor(q, p),
                                            GroupDescription::symmetric(static_cast<int>(q)));
  return GroupDescription::holomorph(a);
}

LocalGroup compute_local_group(const CirculantGraph& x, const UnitSubgroup& multipliers, Int p) {
  const Modulus& modulus = x.modulus();
  const Int n = modulus.value();
  if (n % p != 0) throw InvalidArgument(std::to_string(p) + " does not divide " + std::to_string(n));
  const Int cofactor = n / p;
  const UnitSubgroup local = multipliers_fixing_cofactor(multipliers, n, cofactor);
  const bool promoted = static_cast<Int>(local.size()) * p == p * (p - 1);
  std::vector<Permutation> gens;
  if (promoted) {
    gens = lift_symmetric(modulus, p);
  } else {
    gens.push_back(affine(n, 1, cofactor));
    for (Int a : unit_generators(local)) gens.push_back(affine(n, a, 0));
  }
  require_automorphisms(x, gens, "local group");
  return {p, PermGroup(static_cast<int>(n), std::move(gens)), promoted};
}

PrimeMerge merge_symmetric_primes(const CirculantGraph& x,
                                  const std::vector<LocalGroup>& local_groups) {
  const Modulus& modulus = x.modulus();
  const Int n = modulus.value();
  std::vector<Int> symmetric;
  for (const auto& e : local_groups)
    if (e.promoted) symmetric.push_back(e.prime);

  // Union-find over indices into `symmetric`.
  std::vector<std::size_t> parent(symmetric.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i];
    return i;
  };
  for (std::size_t i = 0; i < symmetric.size(); ++i)
    for (std::size_t j = i + 1; j < symmetric.size(); ++j) {
      const Int pi = symmetric[i];
      const Int pj = symmetric[j];
      const Int step = pi * pj;
      std::vector<int> images(static_cast<std::size_t>(n));
      std::iota(images.begin(), images.end(), 0);
      for (Int k = 0; k < n / step; ++k) {
        const Int a = mod(n / pi + k * step, n);
        const Int b = mod(n / pj + k * step, n);
        images[static_cast<std::size_t>(a)] = static_cast<int>(b);
        images[static_cast<std::size_t>(b)] = static_cast<int>(a);
      }
      if (preserves_adjacency(x, images)) {
        const std::size_t ri = find(i);
        const std::size_t rj = find(j);
        if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
      }
    }

  PrimeMerge out;
  std::map<std::size_t, std::vector<Int>> by_root;
  for (std::size_t i = 0; i < symmetric.size(); ++i) by_root[find(i)].push_back(symmetric[i]);
  for (auto& [root, primes] : by_root) {
    out.class_products.push_back(
        std::accumulate(primes.begin(), primes.end(), Int{1}, std::multiplies<>()));
    out.classes.push_back(std::move(primes));
  }

  for (Int m : modulus.divisors()) {
    std::vector<Permutation> gens;
    for (Int mi : out.class_products) {
      const Int g = std::gcd(mi, m);
      if (g > 1)
        for (auto& s : lift_symmetric(modulus, g)) gens.push_back(std::move(s));
    }
    for (const auto& e : local_groups)
      if (!e.promoted && m % e.prime == 0)
        gens.insert(gens.end(), e.group.generators().begin(), e.group.generators().end());
    require_automorphisms(x, gens, "divisor group");
    out.divisor_groups.emplace(m, PermGroup(static_cast<int>(n), std::move(gens)));
  }
  return out;
}

SquareFreeWorkspace solve_squarefree(const CirculantGraph& x) {
  require_plain(x);
  const Modulus& modulus = x.modulus();
  const Int n = modulus.value();
  if (!modulus.is_squarefree() || modulus.is_prime() || n < 2)
    throw InvalidArgument("square-free solver needs a square-free composite order, got " +
                          std::to_string(n));
  const int degree = static_cast<int>(n);

  UnitSubgroup a = multiplier_stabilizer(modulus, x.set());

  std::vector<LocalGroup> local;
  std::vector<Int> symmetric;
  for (Int p : modulus.primes()) {
    local.push_back(compute_local_group(x, a, p));
    if (local.back().promoted) symmetric.push_back(p);
  }

  PrimeMerge merge = merge_symmetric_primes(x, local);

  std::map<Int, UnitSubgroup> divisor_multipliers;
  std::map<Int, PermGroup> extended;
  for (Int m : modulus.divisors()) {
    UnitSubgroup am = multipliers_fixing_cofactor(a, n, n / m);
    std::vector<Permutation> gens = merge.divisor_groups.at(m).generators();
    for (Int u : unit_generators(am)) gens.push_back(affine(n, u, 0));
    extended.emplace(m, PermGroup(degree, std::move(gens)));
    divisor_multipliers.emplace(m, std::move(am));
  }

  const PermGroup& full = extended.at(n);
  PermGroup g = full;
  const auto systems = cyclic_block_systems(full);
  for (const auto& inner : systems) {
    const Int k = static_cast<Int>(inner.block_size());
    if (k <= 1 || k >= n) continue;
    for (const auto& outer : systems) {
      const Int size = static_cast<Int>(outer.block_size());
      if (size % k != 0 || size == n) continue;
      // D_0 is the block of the coarser system through 0.
      const std::vector<int>& d0 = outer.blocks.front();
      if (!preserves_adjacency(x, partial_translation(degree, n / k, d0).images())) continue;
      for (const auto& block : outer.blocks)
        for (const auto& gen : extended.at(k).generators()) {
          const Permutation local_gen = restrict_to(gen, block);
          if (local_gen.is_identity() || !preserves_adjacency(x, local_gen.images())) continue;
          g = g.with_generator(local_gen);
        }
    }
  }

  return SquareFreeWorkspace{std::move(a),
                             std::move(local),
                             std::move(symmetric),
                             std::move(merge),
                             std::move(divisor_multipliers),
                             std::move(extended),
                             std::move(g)};
}

GroupDescription aut_squarefree(const CirculantGraph& x) {
  std::vector<Permutation> gens = solve_squarefree(x).group.generators();
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return GroupDescription::generated_by(static_cast<int>(x.order()), std::move(gens));
}

std::string to_string(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Prime: return "prime";
    case Method::Pq: return "pq";
    case Method::SquareFree: return "squarefree";
    case Method::Oracle: return "oracle";
  }
  return "auto";
}

Method parse_method(const std::string& text) {
  for (Method m : {Method::Auto, Method::Prime, Method::Pq, Method::SquareFree, Method::Oracle})
    if (to_string(m) == text) return m;
  throw InvalidArgument("unknown method '" + text + "'");
}

Solution aut(const CirculantGraph& x, const SolveOptions& options) {
  require_plain(x);
  const Modulus& modulus = x.modulus();
  const Int n = modulus.value();
  auto oracle = [&] {
    SearchBudget budget = options.budget;
    budget.max_vertices = std::min(budget.max_vertices, options.oracle_vertex_bound);
    if (n > budget.max_vertices) throw UnsupportedOrder(n);
    return Solution{GroupDescription::generated_by(brute_force_aut(x, budget)), Method::Oracle};
  };

  switch (options.method) {
    case Method::Prime: return {aut_prime(x), Method::Prime};
    case Method::Pq: return {aut_pq(x), Method::Pq};
    case Method::SquareFree: return {aut_squarefree(x), Method::SquareFree};
    case Method::Oracle: return oracle();
    case Method::Auto: break;
  }

  if (n <= 2) return {GroupDescription::symmetric(static_cast<int>(n)), Method::Prime};
  if (modulus.is_prime()) return {aut_prime(x), Method::Prime};
  if (is_empty_or_complete(x) && modulus.is_squarefree())
    return {GroupDescription::symmetric(static_cast<int>(n)), Method::SquareFree};
  if (modulus.is_squarefree()) {
    GroupDescription answer = aut_squarefree(x);
    if (options.cross_check_pq && modulus.prime_factors().size() == 2) {
      const PermGroup pq = realize(aut_pq(x));
      if (!same_group(pq, realize(answer)))
        throw std::logic_error("square-free and pq solvers disagree on " + format_graph(x));
    }
    return {std::move(answer), Method::SquareFree};
  }
  return oracle();
}

}  // namespace circulant
