#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "circulant/graph.hpp"

namespace test_support {

inline circulant::CirculantGraph circ(circulant::Int n, std::initializer_list<circulant::Int> s) {
  const std::vector<circulant::Int> set(s);
  return circulant::new_circulant(n, set);
}

inline circulant::CirculantGraph circ(circulant::Int n, const std::vector<circulant::Int>& s) {
  return circulant::new_circulant(n, s);
}

inline std::vector<circulant::Int> squares_mod(circulant::Int p) {
  std::vector<circulant::Int> out;
  for (circulant::Int a = 1; a < p; ++a) out.push_back(a * a % p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace test_support
