#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qm/finite_group.hpp"
#include "qm/smith.hpp"

namespace qm {

enum class Side : std::uint8_t { A = 0, B = 1 };

inline Side other(Side s) { return s == Side::A ? Side::B : Side::A; }

/// A generator of A *_C B: a nonidentity element of one factor.
struct ALetter {
  Side side = Side::A;
  Elem value = 1;

  friend auto operator<=>(const ALetter&, const ALetter&) = default;
};

using AWord = std::vector<ALetter>;

/// An element of A *_C B stored as its canonical reduced word: reduced, and
/// at every junction the gauge is chosen so that the letter to its left is
/// the least element of its right C-coset. A single letter lying in C is
/// spelled on the A side.
class AElement {
 public:
  AElement() = default;
  const AWord& word() const { return form_; }
  bool is_identity() const { return form_.empty(); }

  friend bool operator==(const AElement&, const AElement&) = default;
  friend auto operator<=>(const AElement&, const AElement&) = default;

 private:
  friend class AmalgamPresentation;
  explicit AElement(AWord form) : form_(std::move(form)) {}
  AWord form_;
};

/// Reduced words representing one element, parameterized by the C values
/// c_1..c_{n-1} at interior junctions: member letter i is
/// iota(c_{i-1}) x_i iota(c_i)^{-1} with c_0 = c_n = 1.
struct AGaugeOrbit {
  AWord base;
  int c_order = 1;

  int junctions() const { return base.size() < 2 ? 0 : static_cast<int>(base.size()) - 1; }
  /// |C|^(n-1), saturating at max long long.
  long long size() const;
};

/// A *_C B with C embedded in both factors. Acts as the group model for the
/// quasimorphism routines.
class AmalgamPresentation {
 public:
  using Letter = ALetter;
  using Word = AWord;
  using Element = AElement;

  AmalgamPresentation(FiniteGroup a, FiniteGroup b, Embedding iota_a, Embedding iota_b);

  const FiniteGroup& group(Side s) const { return s == Side::A ? a_ : b_; }
  const FiniteGroup& c() const { return iota_a_.source(); }
  const Embedding& iota(Side s) const { return s == Side::A ? iota_a_ : iota_b_; }
  bool in_c(Side s, Elem x) const { return iota(s).image().contains(x); }
  bool valid_letter(const ALetter& l) const;

  // Word-level operations.
  AWord reduce(const AWord& w) const;
  bool is_reduced(const AWord& w) const;
  AWord inverse_word(const AWord& w) const;

  // Element-level operations.
  AElement element(const AWord& w) const;
  AElement identity() const { return {}; }
  AElement multiply(const AElement& x, const AElement& y) const;
  AElement inverse(const AElement& x) const;
  bool equals(const AWord& u, const AWord& v) const { return element(u) == element(v); }
  /// Geodesic length over the generating set (A u B) \ {1}.
  int length(const AElement& g) const { return static_cast<int>(g.word().size()); }
  const AWord& word(const AElement& g) const { return g.word(); }

  AGaugeOrbit gauge_orbit(const AElement& g) const;
  /// Word for one gauge assignment (gauge.size() == orbit.junctions()).
  AWord orbit_member(const AGaugeOrbit& orbit, const std::vector<Elem>& gauge) const;
  /// Every reduced word representing g. Throws CapExceeded when the orbit is
  /// larger than cap.
  std::vector<AWord> enumerate_geodesics(const AElement& g, long long cap = 1 << 20) const;

  // Letter coding for automata and exhaustive enumeration: A letters first.
  int alphabet_size() const { return a_.order() - 1 + b_.order() - 1; }
  int code(const ALetter& l) const {
    return l.side == Side::A ? l.value - 1 : a_.order() - 1 + l.value - 1;
  }
  ALetter letter(int code) const;

  /// G^ab with one generator per factor element (A elements first, then B).
  const AbelianQuotient& abelianization() const { return abelian_; }
  std::vector<long long> abelian_image(const AWord& w) const;
  bool in_commutator_subgroup(const AWord& w) const { return abelian_.is_zero(abelian_image(w)); }

  std::string format(const AWord& w) const;
  /// Parses "A:3 B:1 A:2"; the empty string is the identity.
  AWord parse(std::string_view text) const;

  /// Least element of the right coset x*iota_s(C), with the C element that
  /// attains it.
  std::pair<Elem, Elem> coset_min(Side s, Elem x) const { return coset_min_[static_cast<int>(s)][x]; }

 private:
  AWord canonical(AWord reduced) const;

  FiniteGroup a_, b_;
  Embedding iota_a_, iota_b_;
  std::vector<std::pair<Elem, Elem>> coset_min_[2];
  AbelianQuotient abelian_;
};

// Free-function surface.
inline AWord reduce(const AmalgamPresentation& p, const AWord& w) { return p.reduce(w); }
inline bool is_reduced(const AmalgamPresentation& p, const AWord& w) { return p.is_reduced(w); }
inline AElement element(const AmalgamPresentation& p, const AWord& w) { return p.element(w); }
inline bool equals(const AmalgamPresentation& p, const AWord& u, const AWord& v) { return p.equals(u, v); }
inline int geodesic_length(const AmalgamPresentation& p, const AElement& g) { return p.length(g); }

}  // namespace qm

template <>
struct std::hash<qm::AElement> {
  std::size_t operator()(const qm::AElement& g) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& l : g.word())
      h = (h ^ (static_cast<std::size_t>(l.side) * 131 + static_cast<std::size_t>(l.value))) * 0x100000001b3ull;
    return h;
  }
};
