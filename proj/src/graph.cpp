#include "circulant/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "circulant/errors.hpp"

namespace circulant {

bool ConnectionSet::contains(Int s) const {
  return std::binary_search(elements.begin(), elements.end(), mod(s, n));
}

Colour ConnectionSet::colour_of(Int s) const {
  const Int r = mod(s, n);
  if (!contains(r)) return 0;
  auto it = colours.find(r);
  return it == colours.end() ? 1 : it->second;
}

CirculantGraph::CirculantGraph(Modulus modulus, ConnectionSet connection)
    : modulus_(std::move(modulus)), connection_(std::move(connection)) {
  if (connection_.n != modulus_.value())
    throw InvalidArgument("connection set order does not match modulus");
  member_.assign(static_cast<std::size_t>(modulus_.value()), 0);
  for (Int s : connection_.elements) member_[static_cast<std::size_t>(s)] = 1;
}

bool CirculantGraph::adjacent(Int i, Int j) const {
  return member_[static_cast<std::size_t>(mod(j - i, order()))] != 0;
}

Colour CirculantGraph::arc(Int i, Int j) const {
  const Int d = mod(j - i, order());
  if (!member_[static_cast<std::size_t>(d)]) return 0;
  return connection_.colour_of(d);
}

CirculantGraph new_circulant(Int n, std::span<const Int> set,
                             const std::map<Int, Colour>& colours,
                             bool directed) {
  Modulus modulus(n);
  ConnectionSet cs;
  cs.n = n;
  cs.directed = directed;
  for (Int s : set) {
    if (s < 1 || s >= n) throw RangeViolation(s, n);
    cs.elements.push_back(s);
  }
  std::sort(cs.elements.begin(), cs.elements.end());
  cs.elements.erase(std::unique(cs.elements.begin(), cs.elements.end()),
                    cs.elements.end());
  for (const auto& [s, c] : colours) {
    if (!cs.contains(s))
      throw InvalidArgument("colour given for " + std::to_string(s) +
                            " which is not in the connection set");
    if (c <= 0) throw InvalidArgument("colours must be positive");
    if (c != 1) cs.colours.emplace(s, c);
  }
  if (!directed) {
    for (Int s : cs.elements) {
      if (!cs.contains(n - s)) throw SymmetryViolation(s);
      if (cs.colour_of(s) != cs.colour_of(n - s))
        throw InvalidArgument("colours of " + std::to_string(s) + " and " +
                              std::to_string(n - s) + " differ");
    }
  }
  return CirculantGraph(std::move(modulus), std::move(cs));
}

CirculantGraph new_circulant(Int n, std::span<const Int> set, bool directed) {
  return new_circulant(n, set, {}, directed);
}

DenseGraph::DenseGraph(int order, bool directed)
    : order_(order), directed_(directed) {
  if (order < 0) throw InvalidArgument("negative graph order");
  arcs_.assign(static_cast<std::size_t>(order) * static_cast<std::size_t>(order),
               0);
}

void DenseGraph::set_arc(int i, int j, Colour c) {
  if (i == j) throw InvalidArgument("loops are not allowed");
  arcs_[index(i, j)] = c;
  if (!directed_) arcs_[index(j, i)] = c;
}

std::size_t DenseGraph::edge_count() const {
  std::size_t arcs = 0;
  for (Colour c : arcs_)
    if (c != 0) ++arcs;
  return directed_ ? arcs : arcs / 2;
}

DenseGraph to_dense(const CirculantGraph& x) {
  const int n = static_cast<int>(x.order());
  DenseGraph g(n, x.directed());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) {
        const Colour c = x.arc(i, j);
        if (c != 0) g.set_arc(i, j, c);
      }
  return g;
}

DenseGraph empty_graph(int order, bool directed) {
  return DenseGraph(order, directed);
}

DenseGraph complete_graph(int order) {
  DenseGraph g(order, false);
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j) g.set_arc(i, j);
  return g;
}

bool preserves_adjacency(const DenseGraph& x, std::span<const int> images) {
  const int n = x.order();
  if (static_cast<int>(images.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x.arc(i, j) != x.arc(images[i], images[j])) return false;
  return true;
}

bool preserves_adjacency(const CirculantGraph& x, std::span<const int> images) {
  const Int n = x.order();
  if (static_cast<Int>(images.size()) != n) return false;
  for (Int i = 0; i < n; ++i)
    for (Int j = 0; j < n; ++j)
      if (x.arc(i, j) != x.arc(images[i], images[j])) return false;
  return true;
}

DenseGraph wreath_graph(const DenseGraph& outer, const DenseGraph& inner) {
  if (outer.directed() != inner.directed())
    throw InvalidArgument("wreath product needs equal directedness");
  const int a = outer.order();
  const int b = inner.order();
  DenseGraph g(a * b, outer.directed());
  for (int x1 = 0; x1 < a; ++x1)
    for (int y1 = 0; y1 < b; ++y1)
      for (int x2 = 0; x2 < a; ++x2)
        for (int y2 = 0; y2 < b; ++y2) {
          Colour c = 0;
          if (x1 == x2)
            c = inner.arc(y1, y2);
          else
            c = outer.arc(x1, x2);
          if (c != 0) g.set_arc(x1 * b + y1, x2 * b + y2, c);
        }
  return g;
}

CirculantGraph subgroup_induced(const CirculantGraph& x, Int m) {
  const Int n = x.order();
  if (m < 1 || n % m != 0)
    throw InvalidArgument(std::to_string(m) + " does not divide " +
                          std::to_string(n));
  const Int k = n / m;
  std::vector<Int> set;
  std::map<Int, Colour> colours;
  for (Int j = 1; j < k; ++j) {
    const Colour c = x.connection().colour_of(j * m);
    if (c == 0) continue;
    set.push_back(j);
    if (c != 1) colours.emplace(j, c);
  }
  return new_circulant(k, set, colours, x.directed());
}

CirculantGraph complement(const CirculantGraph& x) {
  if (x.directed() || x.coloured())
    throw InvalidArgument("complement needs an undirected uncoloured graph");
  std::vector<Int> set;
  for (Int s = 1; s < x.order(); ++s)
    if (!x.connection().contains(s)) set.push_back(s);
  return new_circulant(x.order(), set);
}

bool is_connected(const CirculantGraph& x) {
  Int g = x.order();
  for (Int s : x.set()) g = std::gcd(g, s);
  return g == 1;
}

std::optional<WreathDecomposition> wreath_decomposition(const CirculantGraph& x,
                                                        Int d) {
  const Int n = x.order();
  if (d <= 1 || d >= n || n % d != 0)
    throw InvalidArgument("wreath decomposition needs a proper divisor 1 < d < n");
  const Int step = n / d;  // H = step * Z_n has order d
  const auto& cs = x.connection();
  std::vector<Int> outer_set;
  std::map<Int, Colour> outer_colours;
  for (Int s : cs.elements) {
    if (s % step == 0) continue;
    const Colour c = cs.colour_of(s);
    for (Int t = 0; t < d; ++t)
      if (cs.colour_of(s + t * step) != c) return std::nullopt;
    const Int image = s % step;
    if (std::find(outer_set.begin(), outer_set.end(), image) == outer_set.end()) {
      outer_set.push_back(image);
      if (c != 1) outer_colours.emplace(image, c);
    }
  }
  WreathDecomposition out{new_circulant(step, outer_set, outer_colours, x.directed()),
                          subgroup_induced(x, step)};

  const DenseGraph product = wreath_graph(to_dense(out.outer), to_dense(out.inner));
  for (Int x1 = 0; x1 < step; ++x1)
    for (Int y1 = 0; y1 < d; ++y1)
      for (Int x2 = 0; x2 < step; ++x2)
        for (Int y2 = 0; y2 < d; ++y2) {
          const Colour lhs = product.arc(static_cast<int>(x1 * d + y1),
                                         static_cast<int>(x2 * d + y2));
          const Colour rhs = x.arc(x1 + step * y1, x2 + step * y2);
          if (lhs != rhs)
            throw std::logic_error("wreath decomposition isomorphism check failed");
        }
  return out;
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_spaces();
  if (pos == text.size()) return out;
  while (true) {
    skip_spaces();
    Int value = 0;
    const char* begin = text.data() + pos;
    const auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == begin)
      throw ParseError("expected an integer", pos + 1);
    pos += static_cast<std::size_t>(ptr - begin);
    out.push_back(value);
    skip_spaces();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos + 1);
    ++pos;
  }
  return out;
}

CirculantGraph parse_graph(std::string_view text, bool directed) {
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos)
    throw ParseError("expected 'n;s1,s2,...'", text.size() + 1);
  std::vector<Int> head;
  try {
    head = parse_int_list(text.substr(0, semi));
  } catch (const ParseError& e) {
    throw ParseError("bad vertex count", e.column());
  }
  if (head.size() != 1) throw ParseError("expected a single vertex count", 1);
  if (head[0] < 1) throw ParseError("vertex count must be positive", 1);
  std::vector<Int> set;
  try {
    set = parse_int_list(text.substr(semi + 1));
  } catch (const ParseError& e) {
    throw ParseError("bad connection set", semi + 1 + e.column());
  }
  return new_circulant(head[0], set, directed);
}

std::string format_graph(const CirculantGraph& x) {
  std::string out = std::to_string(x.order()) + ";";
  for (std::size_t i = 0; i < x.set().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(x.set()[i]);
  }
  return out;
}

}  // namespace circulant
