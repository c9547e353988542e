#pragma once

#include <algorithm>
#include <concepts>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "qm/amalgam.hpp"
#include "qm/automaton.hpp"
#include "qm/error.hpp"
#include "qm/hnn.hpp"

namespace qm {

/// Minimum of (|word| - |word|_w) over the gauge orbit of g, where the
/// automaton matches w. These are the dynamic programs behind c_w; state is
/// (junction, gauge value, match progress).
int counting_excess(const AmalgamPresentation& p, const AElement& g, const PatternAutomaton& aut);
int counting_excess(const HnnPresentation& p, const HElement& g, const PatternAutomaton& aut);

/// What the counting machinery needs from a group with a finite generating
/// set: normal forms, geodesic length, letter coding and the orbit DP.
template <class M>
concept GroupModel = requires(const M& m, const typename M::Word& w, const typename M::Element& g, int code,
                              const PatternAutomaton& aut) {
  { m.element(w) } -> std::same_as<typename M::Element>;
  { m.word(g) } -> std::convertible_to<const typename M::Word&>;
  { m.identity() } -> std::same_as<typename M::Element>;
  { m.multiply(g, g) } -> std::same_as<typename M::Element>;
  { m.inverse(g) } -> std::same_as<typename M::Element>;
  { m.length(g) } -> std::convertible_to<int>;
  { m.is_reduced(w) } -> std::convertible_to<bool>;
  { m.inverse_word(w) } -> std::same_as<typename M::Word>;
  { m.alphabet_size() } -> std::convertible_to<int>;
  { m.code(w[0]) } -> std::convertible_to<int>;
  { m.letter(code) } -> std::same_as<typename M::Letter>;
  { m.format(w) } -> std::convertible_to<std::string>;
  { counting_excess(m, g, aut) } -> std::convertible_to<int>;
};

template <GroupModel M>
std::vector<int> encode(const M& m, const typename M::Word& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (const auto& l : w) out.push_back(m.code(l));
  return out;
}

template <GroupModel M>
typename M::Word concat(const typename M::Word& u, const typename M::Word& v) {
  typename M::Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

template <GroupModel M>
typename M::Word power(const M& m, const typename M::Word& w, int n) {
  typename M::Word base = n < 0 ? m.inverse_word(w) : w;
  typename M::Word out;
  out.reserve(base.size() * static_cast<std::size_t>(n < 0 ? -n : n));
  for (int k = 0; k < (n < 0 ? -n : n); ++k) out.insert(out.end(), base.begin(), base.end());
  return out;
}

/// A counting pattern w with |w| >= 2, its inverse, and matchers for both.
template <GroupModel M>
class Pattern {
 public:
  using Word = typename M::Word;

  Pattern(const M& m, Word w) : word_(std::move(w)), inverse_(m.inverse_word(word_)) {
    if (word_.size() < 2) throw PreconditionError("pattern must have length at least 2");
    square_reduced_ = m.is_reduced(concat<M>(word_, word_));
    const auto fwd = encode(m, word_);
    const auto bwd = encode(m, inverse_);
    forward_ = PatternAutomaton(fwd, m.alphabet_size());
    backward_ = PatternAutomaton(bwd, m.alphabet_size());
  }

  const Word& word() const { return word_; }
  const Word& inverse_word() const { return inverse_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool square_reduced() const { return square_reduced_; }
  const PatternAutomaton& forward() const { return forward_; }
  const PatternAutomaton& backward() const { return backward_; }
  /// The pattern for w^-1.
  Pattern inverted(const M& m) const { return Pattern(m, inverse_); }

 private:
  Word word_, inverse_;
  bool square_reduced_ = false;
  PatternAutomaton forward_, backward_;
};

namespace detail {

template <GroupModel M>
void require_square_reduced(const M& m, const Pattern<M>& w) {
  if (!w.square_reduced())
    throw PreconditionError("pattern square not reduced: w^2 = " + m.format(concat<M>(w.word(), w.word())));
}

template <GroupModel M>
int c_from_automaton(const M& m, const typename M::Element& g, const PatternAutomaton& aut) {
  if (g == m.identity()) return 0;
  return m.length(g) - counting_excess(m, g, aut);
}

}  // namespace detail

/// Counting function c_w(g) = |g| - inf over words a' for g of (|a'| - |a'|_w).
template <GroupModel M>
int c_w(const M& m, const typename M::Element& g, const Pattern<M>& w) {
  detail::require_square_reduced(m, w);
  return detail::c_from_automaton(m, g, w.forward());
}

/// c_{w^-1}(g).
template <GroupModel M>
int c_w_inverse(const M& m, const typename M::Element& g, const Pattern<M>& w) {
  detail::require_square_reduced(m, w);
  return detail::c_from_automaton(m, g, w.backward());
}

struct QmValue {
  int c_plus = 0;
  int c_minus = 0;
  int h() const { return c_plus - c_minus; }
  friend bool operator==(const QmValue&, const QmValue&) = default;
};

template <GroupModel M>
QmValue qm_value(const M& m, const typename M::Element& g, const Pattern<M>& w) {
  return {c_w(m, g, w), c_w_inverse(m, g, w)};
}

/// Counting quasimorphism h_w = c_w - c_{w^-1}.
template <GroupModel M>
int h_w(const M& m, const typename M::Element& g, const Pattern<M>& w) {
  return qm_value(m, g, w).h();
}

/// Coboundary h_w(x) + h_w(y) - h_w(xy).
template <GroupModel M>
int delta_h(const M& m, const Pattern<M>& w, const typename M::Element& x, const typename M::Element& y) {
  return h_w(m, x, w) + h_w(m, y, w) - h_w(m, m.multiply(x, y), w);
}

/// Longest word that can realize c_w at an element of length n: any longer
/// word a' has |a'| - |a'|_w > n.
inline int realizer_length_bound(int n, int pattern_length) {
  return n * pattern_length / (pattern_length - 1);
}

/// Exhaustive evaluation of c_w straight from its definition: every word up
/// to a fixed length is enumerated and bucketed by the element it
/// represents. Intended for tiny instances in tests and verification.
template <GroupModel M>
class ExhaustiveOracle {
 public:
  using Element = typename M::Element;
  using Word = typename M::Word;

  ExhaustiveOracle(const M& m, int max_length, long long node_cap = 2'000'000) : max_length_(max_length) {
    const long long k = m.alphabet_size();
    long long total = 1, layer = 1;
    for (int len = 1; len <= max_length; ++len) {
      layer *= k;
      total += layer;
      if (total > node_cap)
        throw CapExceeded("exhaustive search space of " + std::to_string(total) + "+ words exceeds cap " +
                          std::to_string(node_cap));
    }
    std::vector<int> codes;
    Word word;
    // Depth-first enumeration of all words of length <= max_length.
    auto visit = [&](auto&& self) -> void {
      auto& bucket = buckets_[m.element(word)];
      bucket.push_back(codes);
      if (static_cast<int>(codes.size()) == max_length) return;
      for (int c = 0; c < k; ++c) {
        codes.push_back(c);
        word.push_back(m.letter(c));
        self(self);
        codes.pop_back();
        word.pop_back();
      }
    };
    visit(visit);
    for (auto& [g, words] : buckets_) {
      int shortest = std::numeric_limits<int>::max();
      for (const auto& w : words) shortest = std::min<int>(shortest, static_cast<int>(w.size()));
      shortest_[g] = shortest;
    }
  }

  int max_length() const { return max_length_; }

  /// Length of the shortest enumerated word for g (its geodesic length when
  /// that is at most max_length()), or -1 if g was not reached.
  int shortest(const Element& g) const {
    auto it = shortest_.find(g);
    return it == shortest_.end() ? -1 : it->second;
  }

  /// All elements reached, i.e. the ball of radius max_length().
  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (const auto& [g, len] : shortest_) out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// c_w(g) over all words a' for g with |a'| up to the realizer bound.
  int c_w(const M& m, const Element& g, const Word& w) const {
    if (w.size() < 2) throw PreconditionError("pattern must have length at least 2");
    const int n = shortest(g);
    if (n < 0) throw CapExceeded("element not reached by the exhaustive enumeration");
    const int bound = realizer_length_bound(n, static_cast<int>(w.size()));
    if (bound > max_length_)
      throw CapExceeded("realizer bound " + std::to_string(bound) + " exceeds enumeration depth " +
                        std::to_string(max_length_));
    const auto pat = encode(m, w);
    int best = n;  // |a'| - |a'|_w for a geodesic with no occurrences
    for (const auto& word : buckets_.at(g)) {
      if (static_cast<int>(word.size()) > bound) continue;
      best = std::min(best, static_cast<int>(word.size()) - count_nonoverlap(word, pat));
    }
    return n - best;
  }

 private:
  int max_length_;
  std::unordered_map<Element, std::vector<std::vector<int>>> buckets_;
  std::unordered_map<Element, int> shortest_;
};

/// One-shot form of the oracle for a single (g, w).
template <GroupModel M>
int oracle_c_w(const M& m, const typename M::Element& g, const typename M::Word& w,
               long long node_cap = 2'000'000) {
  if (w.size() < 2) throw PreconditionError("pattern must have length at least 2");
  // Enumeration depth must cover |g| (to find geodesics) and the realizer bound.
  int depth = realizer_length_bound(static_cast<int>(m.length(g)), static_cast<int>(w.size()));
  ExhaustiveOracle<M> oracle(m, depth, node_cap);
  return oracle.c_w(m, g, w);
}

}  // namespace qm
