#include "circulant/permgroup.hpp"

#include <algorithm>
#include <numeric>

#include "circulant/errors.hpp"

namespace circulant {

BigInt factorial(Int n) {
  BigInt out = 1;
  for (Int i = 2; i <= n; ++i) out *= i;
  return out;
}

// ---------------------------------------------------------------------------
// StabilizerChain

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation& g,
                                                          std::size_t from) const {
  Permutation h = g;
  for (std::size_t j = from; j < levels_.size(); ++j) {
    const Level& level = levels_[j];
    const int beta = h(level.base_point);
    const auto& u_inv = level.inverse_transversal[static_cast<std::size_t>(beta)];
    if (!u_inv) return {h, j};
    h = h * *u_inv;
  }
  return {h, levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  const auto [residue, level] = sift(g);
  return level == levels_.size() && residue.is_identity();
}

BigInt StabilizerChain::order() const {
  BigInt out = 1;
  for (const auto& level : levels_) out *= level.orbit.size();
  return out;
}

std::vector<int> StabilizerChain::base() const {
  std::vector<int> out;
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto& level : levels_)
    out.insert(out.end(), level.generators.begin(), level.generators.end());
  return out;
}

void StabilizerChain::extend_orbit(std::size_t level, int point,
                                   const Permutation& via) {
  const Permutation u = *levels_[level].transversal[static_cast<std::size_t>(point)] * via;
  const int image = via(point);
  auto& slot = levels_[level].transversal[static_cast<std::size_t>(image)];
  if (!slot) {
    levels_[level].inverse_transversal[static_cast<std::size_t>(image)] = u.inverse();
    slot = u;
    levels_[level].orbit.push_back(image);
    return;
  }
  const Permutation schreier =
      u * *levels_[level].inverse_transversal[static_cast<std::size_t>(image)];
  if (!schreier.is_identity()) add_at(schreier, level + 1);
}

void StabilizerChain::add_at(const Permutation& g, std::size_t level) {
  if (g.degree() != degree_)
    throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                         " does not match group degree " + std::to_string(degree_));
  const auto [residue, stop] = sift(g, level);
  if (stop == levels_.size() && residue.is_identity()) return;

  if (level == levels_.size()) {
    Level fresh;
    fresh.base_point = g.first_moved_point();
    fresh.transversal.resize(static_cast<std::size_t>(degree_));
    fresh.inverse_transversal.resize(static_cast<std::size_t>(degree_));
    fresh.transversal[static_cast<std::size_t>(fresh.base_point)] =
        Permutation::identity(degree_);
    fresh.inverse_transversal[static_cast<std::size_t>(fresh.base_point)] =
        Permutation::identity(degree_);
    fresh.orbit.push_back(fresh.base_point);
    levels_.push_back(std::move(fresh));
  }
  levels_[level].generators.push_back(g);

  // Schreier generators for (old point, g), then (new point, any generator).
  const std::size_t old_size = levels_[level].orbit.size();
  for (std::size_t i = 0; i < old_size; ++i)
    extend_orbit(level, levels_[level].orbit[i], g);
  for (std::size_t i = old_size; i < levels_[level].orbit.size(); ++i) {
    const int point = levels_[level].orbit[i];
    for (std::size_t s = 0; s < levels_[level].generators.size(); ++s) {
      const Permutation gen = levels_[level].generators[s];
      extend_orbit(level, point, gen);
    }
  }
}

void StabilizerChain::for_each_element(
    const std::function<void(const Permutation&)>& visit) const {
  // Every element factors uniquely as u_{k-1} * ... * u_1 * u_0.
  std::function<void(std::ptrdiff_t, const Permutation&)> walk =
      [&](std::ptrdiff_t j, const Permutation& acc) {
        if (j < 0) {
          visit(acc);
          return;
        }
        const Level& level = levels_[static_cast<std::size_t>(j)];
        for (int point : level.orbit)
          walk(j - 1, acc * *level.transversal[static_cast<std::size_t>(point)]);
      };
  walk(static_cast<std::ptrdiff_t>(levels_.size()) - 1, Permutation::identity(degree_));
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(int degree)
    : degree_(degree), cache_(std::make_shared<ChainCache>()) {}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), cache_(std::make_shared<ChainCache>()) {
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) +
                           " in a group of degree " + std::to_string(degree));
    if (!g.is_identity()) generators_.push_back(std::move(g));
  }
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(cache_->once, [this] {
    auto chain = std::make_unique<StabilizerChain>(degree_);
    for (const auto& g : generators_) chain->add(g);
    cache_->chain = std::move(chain);
  });
  return *cache_->chain;
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return chain().contains(g);
}

std::vector<int> PermGroup::orbit(int point) const {
  std::vector<char> seen(static_cast<std::size_t>(degree_), 0);
  std::vector<int> out{point};
  seen[static_cast<std::size_t>(point)] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : generators_) {
      const int y = g(out[i]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<std::size_t>(degree_), 0);
  for (int x = 0; x < degree_; ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    auto o = orbit(x);
    for (int y : o) seen[static_cast<std::size_t>(y)] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

bool PermGroup::is_transitive() const {
  return degree_ <= 1 || static_cast<int>(orbit(0).size()) == degree_;
}

std::vector<Permutation> PermGroup::elements(const BigInt& limit) const {
  const BigInt n = order();
  if (n > limit)
    throw BudgetExceeded("group of order " + n.str() +
                         " exceeds the enumeration bound " + limit.str());
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(n));
  chain().for_each_element([&](const Permutation& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

PermGroup PermGroup::with_generator(const Permutation& g) const {
  if (contains(g)) return *this;
  std::vector<Permutation> gens = generators_;
  gens.push_back(g);
  PermGroup out(degree_, std::move(gens));
  const StabilizerChain& current = chain();
  std::call_once(out.cache_->once, [&] {
    auto extended = std::make_unique<StabilizerChain>(current);
    extended->add(g);
    out.cache_->chain = std::move(extended);
  });
  return out;
}

bool is_subgroup(const PermGroup& b, const PermGroup& a) {
  if (a.degree() != b.degree()) return false;
  return std::all_of(b.generators().begin(), b.generators().end(),
                     [&](const Permutation& g) { return a.contains(g); });
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() &&
         is_subgroup(a, b) && is_subgroup(b, a);
}

PermGroup symmetric_group(int degree) {
  if (degree < 2) return PermGroup(std::max(degree, 0));
  std::vector<int> swap(static_cast<std::size_t>(degree));
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  return PermGroup(degree, {rotation(degree), Permutation(swap)});
}

PermGroup cyclic_group(int degree) {
  if (degree < 2) return PermGroup(std::max(degree, 0));
  return PermGroup(degree, {rotation(degree)});
}

PermGroup dihedral_group(int degree) {
  if (degree < 2) return PermGroup(std::max(degree, 0));
  return PermGroup(degree, {rotation(degree), reflection(degree)});
}

// ---------------------------------------------------------------------------
// Blocks

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  /// Joins under the smaller root; returns false if already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[static_cast<std::size_t>(b)] = a;
    return true;
  }
  std::vector<int> parent;
};

BlockSystem from_classes(int degree, UnionFind& uf) {
  std::vector<std::vector<int>> by_root(static_cast<std::size_t>(degree));
  for (int x = 0; x < degree; ++x)
    by_root[static_cast<std::size_t>(uf.find(x))].push_back(x);
  BlockSystem out{degree, {}};
  for (auto& cell : by_root)
    if (!cell.empty()) out.blocks.push_back(std::move(cell));
  return out;
}

void require_transitive(const PermGroup& g) {
  if (!g.is_transitive())
    throw InvalidArgument("operation needs a transitive group");
}

}  // namespace

BlockSystem minimal_blocks(const PermGroup& g, std::pair<int, int> seed) {
  require_transitive(g);
  const int n = g.degree();
  UnionFind uf(n);
  std::vector<std::pair<int, int>> pending;
  if (uf.unite(seed.first, seed.second)) pending.push_back(seed);
  while (!pending.empty()) {
    const auto [a, b] = pending.back();
    pending.pop_back();
    for (const auto& gen : g.generators()) {
      const int x = gen(a);
      const int y = gen(b);
      if (uf.unite(x, y)) pending.emplace_back(x, y);
    }
  }
  return from_classes(n, uf);
}

bool is_block_system(const PermGroup& g, const BlockSystem& system) {
  std::vector<int> block_of(static_cast<std::size_t>(g.degree()), -1);
  for (std::size_t b = 0; b < system.blocks.size(); ++b)
    for (int x : system.blocks[b]) block_of[static_cast<std::size_t>(x)] = static_cast<int>(b);
  for (const auto& gen : g.generators())
    for (const auto& block : system.blocks) {
      const int target = block_of[static_cast<std::size_t>(gen(block.front()))];
      for (int x : block)
        if (block_of[static_cast<std::size_t>(gen(x))] != target) return false;
    }
  return true;
}

BlockSystem coset_block_system(int n, int k) {
  if (k < 1 || n % k != 0) throw InvalidArgument("block size must divide n");
  const int step = n / k;
  BlockSystem out{n, {}};
  for (int x = 0; x < step; ++x) {
    std::vector<int> block;
    for (int j = 0; j < k; ++j) block.push_back(x + j * step);
    out.blocks.push_back(std::move(block));
  }
  return out;
}

std::vector<BlockSystem> cyclic_block_systems(const PermGroup& g) {
  const int n = g.degree();
  if (n >= 2 && !g.contains(rotation(n)))
    throw InvalidArgument("group does not contain the rotation of its degree");
  std::vector<BlockSystem> out;
  if (n == 0) return out;
  for (Int k : Modulus(n).divisors()) {
    BlockSystem candidate = coset_block_system(n, static_cast<int>(k));
    if (is_block_system(g, candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

bool is_primitive(const PermGroup& g) {
  require_transitive(g);
  for (int v = 1; v < g.degree(); ++v)
    if (minimal_blocks(g, {0, v}).blocks.size() > 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Products

PermGroup wreath_group(const PermGroup& outer, const PermGroup& inner) {
  const int u = outer.degree();
  const int v = inner.degree();
  const int n = u * v;
  std::vector<Permutation> gens;
  for (const auto& h : outer.generators()) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int a = 0; a < u; ++a)
      for (int b = 0; b < v; ++b)
        images[static_cast<std::size_t>(a * v + b)] = h(a) * v + b;
    gens.emplace_back(std::move(images));
  }
  if (u > 0)
    for (const auto& k : inner.generators()) {
      std::vector<int> images(static_cast<std::size_t>(n));
      std::iota(images.begin(), images.end(), 0);
      for (int b = 0; b < v; ++b) images[static_cast<std::size_t>(b)] = k(b);
      gens.emplace_back(std::move(images));
    }
  return PermGroup(n, std::move(gens));
}

PermGroup direct_product_crt(const PermGroup& left, const PermGroup& right) {
  const int m = left.degree();
  const int k = right.degree();
  if (std::gcd(m, k) != 1)
    throw InvalidArgument("CRT product needs coprime degrees " + std::to_string(m) +
                          " and " + std::to_string(k));
  const int n = m * k;
  const Modulus modulus(n);
  // combined[a][b] = x with x = a mod m, x = b mod k.
  std::vector<int> combined(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    combined[static_cast<std::size_t>((x % m) * k + x % k)] = x;
  auto lift = [&](const Permutation& g, bool on_left) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      int a = x % m;
      int b = x % k;
      if (on_left)
        a = g(a);
      else
        b = g(b);
      images[static_cast<std::size_t>(x)] = combined[static_cast<std::size_t>(a * k + b)];
    }
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens;
  for (const auto& g : left.generators()) gens.push_back(lift(g, true));
  for (const auto& g : right.generators()) gens.push_back(lift(g, false));
  return PermGroup(n, std::move(gens));
}

bool are_conjugate(const PermGroup& g, const Permutation& a, const Permutation& b,
                   const BigInt& limit) {
  if (a.degree() != g.degree() || b.degree() != g.degree())
    throw DegreeMismatch("conjugacy test across degrees");
  if (a.cycles().size() != b.cycles().size() || a.order() != b.order()) return false;
  const BigInt n = g.order();
  if (n > limit)
    throw BudgetExceeded("group of order " + n.str() +
                         " exceeds the enumeration bound " + limit.str());
  bool found = false;
  g.chain().for_each_element([&](const Permutation& x) {
    if (!found && x.inverse() * a * x == b) found = true;
  });
  return found;
}

PermGroup relabel(const PermGroup& g, std::span<const int> relabelling) {
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) gens.push_back(relabel(x, relabelling));
  return PermGroup(g.degree(), std::move(gens));
}

}  // namespace circulant
