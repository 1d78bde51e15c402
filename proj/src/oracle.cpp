#include "circulant/oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "circulant/errors.hpp"

namespace circulant {

namespace {

using Colouring = std::vector<int>;
using Clock = std::chrono::steady_clock;

/// Individualization-refinement search for isomorphisms from `left` onto
/// `right`. Colourings of both sides are refined jointly so that a colour
/// id means the same thing on either side.
class PairSearch {
 public:
  PairSearch(const DenseGraph& left, const DenseGraph& right, const SearchBudget& budget)
      : left_(left), right_(right), n_(left.order()) {
    if (budget.time_limit)
      deadline_ = Clock::now() +
                  std::chrono::duration_cast<Clock::duration>(*budget.time_limit);
    int max_colour = 1;
    for (const DenseGraph* g : {&left, &right})
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) max_colour = std::max(max_colour, g->arc(i, j));
    label_base_ = max_colour + 1;
    label_span_ = label_base_ * label_base_;
  }

  /// Joint refinement to the coarsest equitable colouring. False when the
  /// two sides stop matching.
  bool refine(Colouring& lc, Colouring& rc) const {
    int colours = static_cast<int>(std::set<int>(lc.begin(), lc.end()).size());
    std::vector<std::vector<int>> sigs(static_cast<std::size_t>(2 * n_));
    while (true) {
      for (int side = 0; side < 2; ++side) {
        const DenseGraph& g = side == 0 ? left_ : right_;
        const Colouring& c = side == 0 ? lc : rc;
        for (int v = 0; v < n_; ++v) {
          auto& sig = sigs[static_cast<std::size_t>(side * n_ + v)];
          sig.clear();
          sig.push_back(c[static_cast<std::size_t>(v)]);
          for (int w = 0; w < n_; ++w) {
            const int out = g.arc(v, w);
            const int in = g.arc(w, v);
            if (out == 0 && in == 0) continue;
            sig.push_back(c[static_cast<std::size_t>(w)] * label_span_ + out * label_base_ + in);
          }
          std::sort(sig.begin() + 1, sig.end());
        }
      }
      std::vector<const std::vector<int>*> order;
      order.reserve(sigs.size());
      for (const auto& s : sigs) order.push_back(&s);
      std::sort(order.begin(), order.end(),
                [](const auto* a, const auto* b) { return *a < *b; });
      std::map<const std::vector<int>*, int> id;
      int next = -1;
      const std::vector<int>* previous = nullptr;
      for (const auto* s : order) {
        if (!previous || *previous != *s) ++next;
        id[s] = next;
        previous = s;
      }
      const int fresh = next + 1;
      std::vector<int> balance(static_cast<std::size_t>(fresh), 0);
      for (int v = 0; v < n_; ++v) {
        const int a = id[&sigs[static_cast<std::size_t>(v)]];
        const int b = id[&sigs[static_cast<std::size_t>(n_ + v)]];
        lc[static_cast<std::size_t>(v)] = a;
        rc[static_cast<std::size_t>(v)] = b;
        ++balance[static_cast<std::size_t>(a)];
        --balance[static_cast<std::size_t>(b)];
      }
      if (std::any_of(balance.begin(), balance.end(), [](int x) { return x != 0; }))
        return false;
      if (fresh == colours) return true;
      colours = fresh;
    }
  }

  /// Some isomorphism respecting the colourings, as images of left vertices.
  std::optional<std::vector<int>> extend(Colouring lc, Colouring rc) {
    check_time();
    if (!refine(lc, rc)) return std::nullopt;
    const int colours = 1 + *std::max_element(lc.begin(), lc.end());
    if (colours == n_) {
      std::vector<int> owner(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v) owner[static_cast<std::size_t>(rc[static_cast<std::size_t>(v)])] = v;
      std::vector<int> phi(static_cast<std::size_t>(n_));
      for (int v = 0; v < n_; ++v)
        phi[static_cast<std::size_t>(v)] = owner[static_cast<std::size_t>(lc[static_cast<std::size_t>(v)])];
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
          if (left_.arc(i, j) != right_.arc(phi[static_cast<std::size_t>(i)],
                                            phi[static_cast<std::size_t>(j)]))
            return std::nullopt;
      return phi;
    }
    // Branch on the smallest non-singleton cell.
    std::vector<int> size(static_cast<std::size_t>(colours), 0);
    for (int c : lc) ++size[static_cast<std::size_t>(c)];
    int cell = -1;
    for (int c = 0; c < colours; ++c)
      if (size[static_cast<std::size_t>(c)] > 1 &&
          (cell < 0 || size[static_cast<std::size_t>(c)] < size[static_cast<std::size_t>(cell)]))
        cell = c;
    int u = 0;
    while (lc[static_cast<std::size_t>(u)] != cell) ++u;
    for (int w = 0; w < n_; ++w) {
      if (rc[static_cast<std::size_t>(w)] != cell) continue;
      Colouring l2 = lc;
      Colouring r2 = rc;
      l2[static_cast<std::size_t>(u)] = colours;
      r2[static_cast<std::size_t>(w)] = colours;
      if (auto found = extend(std::move(l2), std::move(r2))) return found;
    }
    return std::nullopt;
  }

  int order() const noexcept { return n_; }

 private:
  void check_time() const {
    if (deadline_ && Clock::now() > *deadline_)
      throw BudgetExceeded("automorphism search exceeded its time limit");
  }

  const DenseGraph& left_;
  const DenseGraph& right_;
  int n_;
  int label_base_ = 2;
  int label_span_ = 4;
  std::optional<Clock::time_point> deadline_;
};

void check_vertices(int n, const SearchBudget& budget) {
  if (n > budget.max_vertices)
    throw BudgetExceeded("graph on " + std::to_string(n) + " vertices exceeds the oracle bound of " +
                         std::to_string(budget.max_vertices));
}

std::vector<char> orbit_mask(int n, const std::vector<Permutation>& gens, int point) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> queue{point};
  seen[static_cast<std::size_t>(point)] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      const int y = g(queue[i]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        queue.push_back(y);
      }
    }
  return seen;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  int classes() {
    int count = 0;
    for (std::size_t i = 0; i < parent.size(); ++i)
      if (find(i) == i) ++count;
    return count;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

PermGroup brute_force_aut(const DenseGraph& x, const SearchBudget& budget) {
  const int n = x.order();
  check_vertices(n, budget);
  PairSearch search(x, x, budget);
  std::vector<Permutation> gens;
  // Level i works in the pointwise stabilizer of 0..i-1; deeper levels first
  // so that the generators found so far already generate that stabilizer's
  // own stabilizer chain.
  for (int i = n - 1; i >= 0; --i) {
    Colouring prefix(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < i; ++j) prefix[static_cast<std::size_t>(j)] = j + 1;
    Colouring right = prefix;
    search.refine(prefix, right);
    const int cell = prefix[static_cast<std::size_t>(i)];
    const int colours = 1 + *std::max_element(prefix.begin(), prefix.end());
    std::vector<char> reached = orbit_mask(n, gens, i);
    std::vector<char> refuted(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
      if (v == i || prefix[static_cast<std::size_t>(v)] != cell) continue;
      if (reached[static_cast<std::size_t>(v)] || refuted[static_cast<std::size_t>(v)]) continue;
      Colouring lc = prefix;
      Colouring rc = prefix;
      lc[static_cast<std::size_t>(i)] = colours;
      rc[static_cast<std::size_t>(v)] = colours;
      if (auto phi = search.extend(std::move(lc), std::move(rc))) {
        gens.emplace_back(std::move(*phi));
        reached = orbit_mask(n, gens, i);
      } else {
        // Everything in v's orbit under the current stabilizer is refuted too.
        const auto same = orbit_mask(n, gens, v);
        for (int w = 0; w < n; ++w)
          if (same[static_cast<std::size_t>(w)]) refuted[static_cast<std::size_t>(w)] = 1;
      }
    }
  }
  std::sort(gens.begin(), gens.end());
  return PermGroup(n, std::move(gens));
}

PermGroup brute_force_aut(const CirculantGraph& x, const SearchBudget& budget) {
  check_vertices(static_cast<int>(x.order()), budget);
  return brute_force_aut(to_dense(x), budget);
}

std::optional<Permutation> find_isomorphism(const DenseGraph& x, const DenseGraph& y,
                                            const SearchBudget& budget) {
  if (x.order() != y.order() || x.directed() != y.directed()) return std::nullopt;
  check_vertices(x.order(), budget);
  if (x.edge_count() != y.edge_count()) return std::nullopt;
  PairSearch search(x, y, budget);
  const Colouring start(static_cast<std::size_t>(x.order()), 0);
  if (x.order() == 0) return Permutation();
  if (auto phi = search.extend(start, start)) return Permutation(std::move(*phi));
  return std::nullopt;
}

std::optional<Permutation> are_isomorphic(const CirculantGraph& x, const CirculantGraph& y,
                                          const SearchBudget& budget) {
  const Int n = x.order();
  if (n != y.order() || x.directed() != y.directed() || x.set().size() != y.set().size())
    return std::nullopt;
  for (Int a : n == 1 ? ResidueSet{0} : units(n)) {
    if (n > 1 && scale(x.set(), a, n) != y.set()) continue;
    bool colours_match = true;
    for (Int s : x.set())
      if (x.connection().colour_of(s) != y.connection().colour_of(a * s)) colours_match = false;
    if (colours_match) return n == 1 ? Permutation::identity(1) : affine(n, a, 0);
  }
  return find_isomorphism(to_dense(x), to_dense(y), budget);
}

std::vector<ResidueSet> symmetric_connection_sets(Int n) {
  const Int pairs = n / 2;
  if (pairs > 30) throw BudgetExceeded("too many connection sets to enumerate");
  std::vector<ResidueSet> out;
  for (Int mask = 0; mask < (Int{1} << pairs); ++mask) {
    ResidueSet s;
    for (Int k = 0; k < pairs; ++k)
      if (mask >> k & 1) {
        s.push_back(k + 1);
        if (k + 1 != n - k - 1) s.push_back(n - k - 1);
      }
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

CiReport is_ci_graph(const CirculantGraph& x, const SearchBudget& budget) {
  if (x.directed() || x.coloured())
    throw InvalidArgument("CI check needs an undirected uncoloured graph");
  const Int n = x.order();
  check_vertices(static_cast<int>(n), budget);
  std::set<ResidueSet> multiples;
  for (Int a : units(n)) multiples.insert(scale(x.set(), a, n));
  multiples.insert(x.set());
  const DenseGraph dense = to_dense(x);
  for (const auto& other : symmetric_connection_sets(n)) {
    if (other.size() != x.set().size() || multiples.count(other)) continue;
    if (find_isomorphism(dense, to_dense(new_circulant(n, other)), budget))
      return CiReport{false, other};
  }
  return CiReport{};
}

bool ci_via_conjugacy(const CirculantGraph& x, const SearchBudget& budget) {
  if (x.order() <= 2) return true;
  const PermGroup aut = brute_force_aut(x, budget);
  const auto elements = aut.elements(budget.max_group_order_for_enumeration);
  std::vector<Permutation> full_cycles;
  for (const auto& g : elements)
    if (g.is_full_cycle()) full_cycles.push_back(g);
  if (full_cycles.empty()) return true;
  // Conjugacy of the cyclic subgroups the n-cycles generate: c is covered
  // when some generator c^k of <c> is conjugate to the first n-cycle.
  std::set<Permutation> conjugacy_class;
  for (const auto& g : elements) conjugacy_class.insert(g.inverse() * full_cycles.front() * g);
  const Int n = x.order();
  return std::all_of(full_cycles.begin(), full_cycles.end(), [&](const Permutation& c) {
    for (Int k : units(n))
      if (conjugacy_class.count(power(c, k))) return true;
    return false;
  });
}

CiGroupStatus is_ci_group(Int n) {
  if (n < 1) throw InvalidArgument("group order must be positive");
  auto odd_squarefree = [](Int k) { return k % 2 == 1 && Modulus(k).is_squarefree(); };
  const bool dci = odd_squarefree(n) || (n % 2 == 0 && odd_squarefree(n / 2)) ||
                   (n % 4 == 0 && odd_squarefree(n / 4));
  const bool ci = dci || n == 8 || n == 9 || n == 18;
  return {dci, ci};
}

// ---------------------------------------------------------------------------
// Regular subgroups

namespace {

bool is_semiregular(const Permutation& g) {
  if (g.is_identity()) return true;
  const auto cycles = g.cycles();
  std::size_t covered = 0;
  for (const auto& c : cycles) {
    if (c.size() != cycles.front().size()) return false;
    covered += c.size();
  }
  return static_cast<int>(covered) == g.degree();
}

/// Closure of `members` (indexed by image of 0) under products; fails if two
/// elements share an image of 0 or one is not semiregular.
bool close_semiregular(std::vector<std::optional<Permutation>>& members, int n) {
  std::vector<Permutation> list;
  for (const auto& m : members)
    if (m) list.push_back(*m);
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (const Permutation& p : {list[i] * list[j], list[j] * list[i]}) {
        auto& slot = members[static_cast<std::size_t>(p(0))];
        if (slot) {
          if (*slot != p) return false;
          continue;
        }
        if (!is_semiregular(p)) return false;
        slot = p;
        list.push_back(p);
        if (static_cast<int>(list.size()) > n) return false;
      }
  return true;
}

bool has_element_of_order(const PermGroup& g, Int order) {
  bool found = false;
  g.chain().for_each_element([&](const Permutation& p) {
    if (!found && p.order() == order) found = true;
  });
  return found;
}

}  // namespace

std::vector<RegularSubgroup> regular_subgroups(const PermGroup& g, int n,
                                               const BigInt& order_limit, int degree_limit) {
  if (g.degree() != n) throw DegreeMismatch("regular subgroups need a group of degree n");
  if (n > degree_limit)
    throw BudgetExceeded("regular subgroup enumeration limited to degree " +
                         std::to_string(degree_limit));
  const auto elements = g.elements(order_limit);
  std::vector<std::vector<Permutation>> by_image(static_cast<std::size_t>(n));
  for (const auto& e : elements)
    if (!e.is_identity() && is_semiregular(e)) by_image[static_cast<std::size_t>(e(0))].push_back(e);

  std::set<std::vector<Permutation>> found;
  std::set<std::vector<Permutation>> visited;
  std::function<void(std::vector<std::optional<Permutation>>)> grow =
      [&](std::vector<std::optional<Permutation>> members) {
        std::vector<Permutation> key;
        for (const auto& m : members)
          if (m) key.push_back(*m);
        std::sort(key.begin(), key.end());
        if (!visited.insert(key).second) return;
        int gap = -1;
        for (int v = 0; v < n; ++v)
          if (!members[static_cast<std::size_t>(v)]) {
            gap = v;
            break;
          }
        if (gap < 0) {
          found.insert(key);
          return;
        }
        for (const auto& candidate : by_image[static_cast<std::size_t>(gap)]) {
          auto next = members;
          next[static_cast<std::size_t>(gap)] = candidate;
          if (close_semiregular(next, n)) grow(std::move(next));
        }
      };
  std::vector<std::optional<Permutation>> start(static_cast<std::size_t>(n));
  start[0] = Permutation::identity(n);
  if (n == 1) {
    found.insert({Permutation::identity(1)});
  } else {
    grow(start);
  }

  std::vector<RegularSubgroup> out;
  for (const auto& members : found) {
    PermGroup group(n, members);
    const bool cyclic = n == 1 || has_element_of_order(group, n);
    out.push_back({std::move(group), cyclic});
  }
  return out;
}

namespace {

/// A finite group given by its multiplication table.
struct TableGroup {
  std::string name;
  std::vector<std::vector<int>> mult;  // mult[a][b] = index of a*b
  std::vector<int> inverse;
};

TableGroup table_from_permutations(std::string name, int degree,
                                   const std::vector<std::vector<int>>& gens) {
  std::vector<Permutation> g;
  for (const auto& images : gens) g.emplace_back(images);
  const auto elements = PermGroup(degree, g).elements(BigInt(100000));
  std::map<Permutation, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
  TableGroup t{std::move(name), {}, {}};
  const std::size_t n = elements.size();
  t.mult.assign(n, std::vector<int>(n));
  t.inverse.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    t.inverse[a] = index.at(elements[a].inverse());
    for (std::size_t b = 0; b < n; ++b) t.mult[a][b] = index.at(elements[a] * elements[b]);
  }
  return t;
}

/// The noncyclic groups of order n for n <= 12.
std::vector<TableGroup> noncyclic_groups(int n) {
  std::vector<TableGroup> out;
  auto add = [&](std::string name, int degree, std::vector<std::vector<int>> gens) {
    out.push_back(table_from_permutations(std::move(name), degree, gens));
  };
  switch (n) {
    case 4:
      add("Z2^2", 4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
      break;
    case 6:
      add("S3", 3, {{1, 0, 2}, {1, 2, 0}});
      break;
    case 8:
      add("Z4xZ2", 6, {{1, 2, 3, 0, 4, 5}, {0, 1, 2, 3, 5, 4}});
      add("Z2^3", 6, {{1, 0, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}});
      add("D4", 4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
      add("Q8", 8, {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}});
      break;
    case 9:
      add("Z3^2", 6, {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}});
      break;
    case 10:
      add("D5", 5, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}});
      break;
    case 12:
      add("Z6xZ2", 7, {{1, 2, 0, 4, 3, 5, 6}, {0, 1, 2, 3, 4, 6, 5}});
      add("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
      add("D6", 6, {{1, 2, 3, 4, 5, 0}, {0, 5, 4, 3, 2, 1}});
      add("Dic3", 7, {{1, 2, 0, 3, 4, 5, 6}, {0, 2, 1, 4, 5, 6, 3}});
      break;
    default:
      break;
  }
  return out;
}

/// X = Cay(H, T) for some T: returns the regular copy of H inside Aut(X).
std::optional<PermGroup> cayley_embedding(const CirculantGraph& x, const TableGroup& h,
                                          const SearchBudget& budget) {
  const int n = static_cast<int>(x.order());
  const DenseGraph target = to_dense(x);
  // Inverse classes {t, t^-1} of non-identity elements (index 0 is the identity).
  std::vector<std::vector<int>> classes;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int t = 1; t < n; ++t) {
    if (used[static_cast<std::size_t>(t)]) continue;
    const int inv = h.inverse[static_cast<std::size_t>(t)];
    used[static_cast<std::size_t>(t)] = used[static_cast<std::size_t>(inv)] = 1;
    classes.push_back(inv == t ? std::vector<int>{t} : std::vector<int>{t, inv});
  }
  const std::size_t valency = x.set().size();
  for (Int mask = 0; mask < (Int{1} << classes.size()); ++mask) {
    std::vector<char> in_t(static_cast<std::size_t>(n), 0);
    std::size_t size = 0;
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (mask >> c & 1)
        for (int t : classes[c]) {
          in_t[static_cast<std::size_t>(t)] = 1;
          ++size;
        }
    if (size != valency) continue;
    DenseGraph cay(n, false);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (in_t[static_cast<std::size_t>(
                h.mult[static_cast<std::size_t>(h.inverse[static_cast<std::size_t>(a)])]
                      [static_cast<std::size_t>(b)])])
          cay.set_arc(a, b);
    const auto phi = find_isomorphism(cay, target, budget);
    if (!phi) continue;
    // Left multiplication by g is an automorphism of Cay(H, T); move it to X.
    std::vector<Permutation> gens;
    for (int g = 1; g < n; ++g) {
      std::vector<int> images(static_cast<std::size_t>(n));
      for (int a = 0; a < n; ++a)
        images[static_cast<std::size_t>((*phi)(a))] =
            (*phi)(h.mult[static_cast<std::size_t>(g)][static_cast<std::size_t>(a)]);
      gens.emplace_back(std::move(images));
    }
    return PermGroup(n, std::move(gens));
  }
  return std::nullopt;
}

}  // namespace

std::optional<PermGroup> find_noncyclic_regular_subgroup(const CirculantGraph& x,
                                                         const SearchBudget& budget) {
  const int n = static_cast<int>(x.order());
  if (n < 4 || Modulus(n).is_prime()) return std::nullopt;
  if (n <= 12) {
    const PermGroup aut = brute_force_aut(x, budget);
    if (aut.order() <= 10000) {
      for (auto& r : regular_subgroups(aut, n))
        if (!r.cyclic) return std::move(r.group);
      return std::nullopt;
    }
    for (const auto& h : noncyclic_groups(n))
      if (auto embedded = cayley_embedding(x, h, budget)) return embedded;
    return std::nullopt;
  }
  throw BudgetExceeded("noncyclic regular subgroup search limited to n <= 12");
}

// ---------------------------------------------------------------------------
// Orbit counts

int edge_orbit_count(const CirculantGraph& x, const PermGroup& aut) {
  const int n = static_cast<int>(x.order());
  std::map<std::pair<int, int>, std::size_t> index;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && x.adjacent(u, v) && (x.directed() || u < v))
        index.emplace(std::make_pair(u, v), index.size());
  DisjointSets sets(index.size());
  for (const auto& [edge, id] : index)
    for (const auto& g : aut.generators()) {
      int a = g(edge.first);
      int b = g(edge.second);
      if (!x.directed() && b < a) std::swap(a, b);
      sets.unite(id, index.at({a, b}));
    }
  return sets.classes();
}

int edge_orbit_count(const CirculantGraph& x, const SearchBudget& budget) {
  return edge_orbit_count(x, brute_force_aut(x, budget));
}

int two_arc_orbit_count(const CirculantGraph& x, const PermGroup& aut) {
  const int n = static_cast<int>(x.order());
  std::map<std::array<int, 3>, std::size_t> index;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (a != b && b != c && a != c && x.adjacent(a, b) && x.adjacent(b, c))
          index.emplace(std::array<int, 3>{a, b, c}, index.size());
  DisjointSets sets(index.size());
  for (const auto& [arc, id] : index)
    for (const auto& g : aut.generators())
      sets.unite(id, index.at({g(arc[0]), g(arc[1]), g(arc[2])}));
  return sets.classes();
}

}  // namespace circulant
