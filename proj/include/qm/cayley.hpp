#pragma once

#include <unordered_map>
#include <utility>
#include <vector>

#include "qm/quasimorphism.hpp"

namespace qm {

/// Breadth-first ball in the Cayley graph: every element at distance
/// <= radius from the identity, with its distance, in discovery order
/// (generators tried in letter-code order).
template <GroupModel M>
std::vector<std::pair<typename M::Element, int>> cayley_ball(const M& m, int radius) {
  using Element = typename M::Element;
  std::vector<std::pair<Element, int>> out{{m.identity(), 0}};
  std::unordered_map<Element, int> seen{{m.identity(), 0}};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const auto [g, d] = out[head];
    if (d == radius) continue;
    for (int c = 0; c < m.alphabet_size(); ++c) {
      Element h = m.multiply(g, m.element(typename M::Word{m.letter(c)}));
      if (seen.emplace(h, d + 1).second) out.emplace_back(std::move(h), d + 1);
    }
  }
  return out;
}

}  // namespace qm
