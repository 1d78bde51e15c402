#include "circulant/permutation.hpp"

#include <numeric>

#include "circulant/errors.hpp"

namespace circulant {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[static_cast<std::size_t>(x)])
      throw InvalidArgument("image array is not a permutation");
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (int i = 0; i < degree(); ++i)
    p.images_[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return p;
}

int Permutation::first_moved_point() const noexcept {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return i;
  return -1;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || (*this)(i) == i) continue;
    std::vector<int> cycle;
    for (int x = i; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

bool Permutation::is_full_cycle() const {
  if (degree() == 0) return false;
  int length = 0;
  int x = 0;
  do {
    x = (*this)(x);
    ++length;
  } while (x != 0);
  return length == degree();
}

Int Permutation::order() const {
  Int result = 1;
  for (const auto& c : cycles())
    result = std::lcm(result, static_cast<Int>(c.size()));
  return result;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));
  Permutation p;
  p.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i)
    p.images_[i] = b.images_[static_cast<std::size_t>(a.images_[i])];
  return p;
}

Permutation power(const Permutation& g, Int k) {
  const Int order = g.order();
  k = mod(k, order);
  Permutation result = Permutation::identity(g.degree());
  for (Int i = 0; i < k; ++i) result = result * g;
  return result;
}

std::string to_cycle_string(const Permutation& g) {
  const auto cs = g.cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

Permutation rotation(int n) { return affine(n, 1, 1); }

Permutation reflection(int n) { return affine(n, n - 1, 0); }

Permutation affine(Int n, Int a, Int b) {
  if (n < 1) throw InvalidArgument("affine map needs n >= 1");
  if (n > 1 && !is_unit(a, n)) throw NotAUnit(a, n);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (Int i = 0; i < n; ++i)
    images[static_cast<std::size_t>(i)] = static_cast<int>(mod(a * i + b, n));
  return Permutation(std::move(images));
}

Permutation restrict_to(const Permutation& g, std::span<const int> support) {
  std::vector<int> images(static_cast<std::size_t>(g.degree()));
  std::iota(images.begin(), images.end(), 0);
  for (int x : support) images[static_cast<std::size_t>(x)] = g(x);
  return Permutation(std::move(images));
}

Permutation relabel(const Permutation& g, std::span<const int> relabelling) {
  if (static_cast<int>(relabelling.size()) != g.degree())
    throw DegreeMismatch("relabelling size does not match permutation degree");
  std::vector<int> images(relabelling.size());
  for (int x = 0; x < g.degree(); ++x)
    images[static_cast<std::size_t>(relabelling[static_cast<std::size_t>(x)])] =
        relabelling[static_cast<std::size_t>(g(x))];
  return Permutation(std::move(images));
}

}  // namespace circulant
