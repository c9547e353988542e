#include "qm/quasimorphism.hpp"

#include <limits>

namespace qm {

int counting_excess(const AmalgamPresentation& p, const AElement& g, const PatternAutomaton& aut) {
  const AWord& base = g.word();
  const int n = static_cast<int>(base.size());
  if (n <= 1) return n;  // patterns have length >= 2
  const int nc = p.c().order();
  const int m = aut.length();
  // best[c][q]: maximal occurrence count with junction gauge c and matcher
  // state q after the letters processed so far; -1 marks unreachable.
  std::vector<int> best(static_cast<std::size_t>(nc) * m, -1), next(best.size());
  best[0] = 0;
  for (int i = 0; i < n; ++i) {
    std::fill(next.begin(), next.end(), -1);
    const Side s = base[i].side;
    const auto& grp = p.group(s);
    const auto& io = p.iota(s);
    const int right_choices = i + 1 == n ? 1 : nc;
    for (int cl = 0; cl < nc; ++cl) {
      const Elem left = grp.mul(io(cl), base[i].value);
      for (int q = 0; q < m; ++q) {
        const int cur = best[static_cast<std::size_t>(cl) * m + q];
        if (cur < 0) continue;
        for (int cr = 0; cr < right_choices; ++cr) {
          const Elem x = grp.mul(left, grp.inv(io(cr)));
          int q2 = aut.step(q, p.code({s, x}));
          int cnt = cur;
          if (q2 == m) {
            ++cnt;
            q2 = 0;
          }
          int& slot = next[static_cast<std::size_t>(cr) * m + q2];
          slot = std::max(slot, cnt);
        }
      }
    }
    best.swap(next);
  }
  int most = 0;
  for (int v : best) most = std::max(most, v);
  return n - most;
}

int counting_excess(const HnnPresentation& p, const HElement& g, const PatternAutomaton& aut) {
  const Syllables base = p.syllables(g.word());
  const int k = base.t_count();
  const int nc = p.c().order();
  const int m = aut.length();
  const auto& a = p.a();
  constexpr int kUnreached = std::numeric_limits<int>::max();
  // best[v][q]: minimal (letters emitted - occurrences) with gauge v at the
  // previous t-letter and matcher state q.
  std::vector<int> best(static_cast<std::size_t>(nc) * m, kUnreached), next(best.size());
  best[0] = 0;
  const int t_code[2] = {p.code(HLetter::t_inv()), p.code(HLetter::t())};
  for (int i = 0; i <= k; ++i) {
    std::fill(next.begin(), next.end(), kUnreached);
    const int right_choices = i == k ? 1 : nc;
    const int left_choices = i == 0 ? 1 : nc;
    for (int vl = 0; vl < left_choices; ++vl) {
      const Elem left = i == 0 ? 0 : p.left_factor(base.signs[i - 1], vl);
      const Elem core = a.mul(left, base.slots[i]);
      for (int q = 0; q < m; ++q) {
        const int cur = best[static_cast<std::size_t>(vl) * m + q];
        if (cur == kUnreached) continue;
        for (int vr = 0; vr < right_choices; ++vr) {
          const Elem slot = i == k ? core : a.mul(core, p.right_factor(base.signs[i], vr));
          int q2 = q;
          int cost = cur;
          auto feed = [&](int code) {
            q2 = aut.step(q2, code);
            ++cost;
            if (q2 == m) {
              --cost;
              q2 = 0;
            }
          };
          if (slot != 0) feed(p.code(HLetter::a(slot)));
          if (i < k) feed(t_code[base.signs[i] > 0]);
          int& dst = next[static_cast<std::size_t>(vr) * m + q2];
          dst = std::min(dst, cost);
        }
      }
    }
    best.swap(next);
  }
  int least = kUnreached;
  for (int v : best) least = std::min(least, v);
  return least;
}

}  // namespace qm
