#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "circulant/description.hpp"
#include "circulant/errors.hpp"
#include "circulant/oracle.hpp"
#include "circulant/permgroup.hpp"
#include "helpers.hpp"

using namespace circulant;
using test_support::circ;

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 1}), InvalidArgument);
  const Permutation r = rotation(5);
  CHECK(r == affine(5, 1, 1));
  CHECK(reflection(5) == affine(5, 4, 0));
  CHECK(affine(7, 3, 2) == Permutation(std::vector<int>{2, 5, 1, 4, 0, 3, 6}));
  CHECK_THROWS_AS(affine(6, 2, 0), NotAUnit);
  CHECK(r.order() == 5);
  CHECK(r.is_full_cycle());
  CHECK((r * r.inverse()).is_identity());
  // Products apply the left factor first.
  const Permutation a(std::vector<int>{1, 0, 2});
  const Permutation b(std::vector<int>{0, 2, 1});
  CHECK((a * b)(0) == b(a(0)));
  CHECK_THROWS_AS(a * rotation(4), DegreeMismatch);
  CHECK(to_cycle_string(Permutation(std::vector<int>{1, 0, 3, 2})) == "(0 1)(2 3)");
  CHECK(to_cycle_string(Permutation::identity(3)) == "()");
}

TEST_CASE("chain orders") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(dihedral_group(8).order() == 16);
  CHECK_FALSE(cyclic_group(5).contains(reflection(5)));
  CHECK(symmetric_group(20).order() == factorial(20));
  CHECK(factorial(25) == BigInt("15511210043330985984000000"));
}

TEST_CASE("chain order matches enumeration on random groups") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    std::vector<Permutation> gens;
    const int k = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < k; ++i) {
      std::vector<int> img(static_cast<std::size_t>(n));
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(img);
    }
    const PermGroup g(n, gens);
    if (g.order() > 10000) continue;
    const auto elements = g.elements(10000);
    CHECK(BigInt(elements.size()) == g.order());
    CHECK(std::set<Permutation>(elements.begin(), elements.end()).size() == elements.size());
    // Products of up to three generators are members.
    for (const auto& a : gens)
      for (const auto& b : gens)
        for (const auto& c : gens) CHECK(g.contains(a * b * c));
    // Anything outside the enumerated set is rejected.
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    do {
      const Permutation p(img);
      if (!std::binary_search(elements.begin(), elements.end(), p)) {
        CHECK_FALSE(g.contains(p));
        break;
      }
    } while (std::next_permutation(img.begin(), img.end()));
  }
}

TEST_CASE("elements respects its budget") {
  CHECK_THROWS_AS(symmetric_group(9).elements(1000), BudgetExceeded);
}

TEST_CASE("orbits and transitivity") {
  const PermGroup g(6, {Permutation(std::vector<int>{1, 0, 2, 3, 5, 4})});
  CHECK(g.orbits() == std::vector<std::vector<int>>{{0, 1}, {2}, {3}, {4, 5}});
  CHECK_FALSE(g.is_transitive());
  CHECK(cyclic_group(6).is_transitive());
}

TEST_CASE("minimal_blocks") {
  CHECK(minimal_blocks(cyclic_group(6), {0, 2}).blocks ==
        std::vector<std::vector<int>>{{0, 2, 4}, {1, 3, 5}});
  CHECK(minimal_blocks(symmetric_group(4), {0, 1}).blocks ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(minimal_blocks(dihedral_group(4), {0, 2}).blocks ==
        std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  const PermGroup intransitive(4, {Permutation(std::vector<int>{1, 0, 2, 3})});
  CHECK_THROWS_AS(minimal_blocks(intransitive, {0, 1}), InvalidArgument);
}

TEST_CASE("minimal_blocks output is a block system") {
  for (Int n = 2; n <= 10; ++n)
    for (const auto& s : symmetric_connection_sets(n)) {
      const PermGroup g = brute_force_aut(circ(n, s));
      for (int b = 1; b < n; ++b) {
        const BlockSystem system = minimal_blocks(g, {0, b});
        CHECK(is_block_system(g, system));
        for (const auto& gen : g.generators())
          for (const auto& block : system.blocks) {
            std::vector<int> image;
            for (int v : block) image.push_back(gen(v));
            std::sort(image.begin(), image.end());
            CHECK(std::find(system.blocks.begin(), system.blocks.end(), image) !=
                  system.blocks.end());
          }
      }
    }
}

TEST_CASE("cyclic_block_systems") {
  auto sizes = [](const PermGroup& g) {
    std::vector<std::size_t> out;
    for (const auto& b : cyclic_block_systems(g)) out.push_back(b.block_size());
    return out;
  };
  CHECK(sizes(cyclic_group(6)) == std::vector<std::size_t>{1, 2, 3, 6});
  CHECK(sizes(symmetric_group(6)) == std::vector<std::size_t>{1, 6});
  const auto two_k3 = sizes(brute_force_aut(circ(6, {2, 4})));
  CHECK(std::find(two_k3.begin(), two_k3.end(), 3) != two_k3.end());
}

TEST_CASE("is_primitive") {
  CHECK(is_primitive(symmetric_group(5)));
  CHECK_FALSE(is_primitive(brute_force_aut(circ(6, {1, 5}))));
  CHECK(is_primitive(cyclic_group(5)));
}

TEST_CASE("wreath_group orders") {
  CHECK(wreath_group(symmetric_group(2), symmetric_group(3)).order() == 72);
  CHECK(wreath_group(symmetric_group(5), symmetric_group(2)).order() == 3840);
  CHECK(wreath_group(PermGroup(1), dihedral_group(5)).order() == 10);
  for (int u = 1; u <= 4; ++u)
    for (int v = 1; v <= 4; ++v) {
      const PermGroup h = dihedral_group(u);
      const PermGroup k = cyclic_group(v);
      BigInt expected = h.order();
      for (int i = 0; i < u; ++i) expected *= k.order();
      CHECK(wreath_group(h, k).order() == expected);
    }
}

TEST_CASE("direct_product_crt") {
  CHECK(direct_product_crt(symmetric_group(3), symmetric_group(5)).order() == 720);
  CHECK(direct_product_crt(PermGroup(1), PermGroup(1)).order() == 1);
  const PermGroup c15 = direct_product_crt(cyclic_group(3), cyclic_group(5));
  CHECK(c15.contains(rotation(15)));
  CHECK(c15.order() == 15);
}

TEST_CASE("realize") {
  CHECK(realize(GroupDescription::symmetric(3)).order() == 6);
  const std::vector<Int> four{4};
  CHECK(realize(GroupDescription::holomorph(subgroup_generated(Modulus(5), four))).order() == 10);
  CHECK(realize(GroupDescription::wreath(GroupDescription::symmetric(2),
                                         GroupDescription::symmetric(3)))
            .order() == 72);
  const auto coset = realize(GroupDescription::wreath(
      GroupDescription::symmetric(2), GroupDescription::symmetric(3), WreathLayout::Coset));
  CHECK(same_group(coset, brute_force_aut(circ(6, {2, 4}))));
  CHECK_THROWS_AS(GroupDescription::direct_product(GroupDescription::symmetric(2),
                                                   GroupDescription::symmetric(4)),
                  InvalidArgument);
}

TEST_CASE("symbolic order agrees with the chain") {
  const std::vector<Int> gens{4, 11};
  const std::vector<GroupDescription> cases{
      GroupDescription::symmetric(7),
      GroupDescription::holomorph(subgroup_generated(Modulus(15), gens)),
      GroupDescription::wreath(GroupDescription::symmetric(3), GroupDescription::symmetric(4)),
      GroupDescription::direct_product(GroupDescription::symmetric(3),
                                       GroupDescription::symmetric(5)),
  };
  for (const auto& d : cases) CHECK(d.symbolic_order() == realize(d).order());
}

TEST_CASE("to_string notation") {
  const std::vector<Int> m{14};
  CHECK(to_string(GroupDescription::holomorph(subgroup_generated(Modulus(15), m))) ==
        "{T_{a,b} : a ∈ {1,14}, b ∈ Z_15}");
  CHECK(to_string(GroupDescription::wreath(GroupDescription::symmetric(2),
                                           GroupDescription::symmetric(3))) == "S_2 ≀ S_3");
}

TEST_CASE("are_conjugate") {
  CHECK(are_conjugate(symmetric_group(3), Permutation(std::vector<int>{1, 0, 2}),
                      Permutation(std::vector<int>{0, 2, 1})));
  const Permutation r = rotation(4);
  CHECK_FALSE(are_conjugate(cyclic_group(4), r, power(r, 3)));
  CHECK(are_conjugate(dihedral_group(4), r, power(r, 3)));
}

TEST_CASE("with_generator extends the chain") {
  const PermGroup c = cyclic_group(5);
  const PermGroup d = c.with_generator(reflection(5));
  CHECK(d.order() == 10);
  CHECK(c.with_generator(power(rotation(5), 2)).generators().size() == c.generators().size());
}
