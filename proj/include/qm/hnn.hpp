#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qm/finite_group.hpp"
#include "qm/smith.hpp"
#include "qm/symbol_pattern.hpp"

namespace qm {

/// A generator of A *_C phi: the stable letter t, its inverse, or a
/// nonidentity element of A.
struct HLetter {
  enum class Kind : std::uint8_t { kT, kTInv, kA };
  Kind kind = Kind::kT;
  Elem value = 0;  // meaningful for kA only

  static HLetter t() { return {Kind::kT, 0}; }
  static HLetter t_inv() { return {Kind::kTInv, 0}; }
  static HLetter a(Elem x) { return {Kind::kA, x}; }
  bool is_t() const { return kind != Kind::kA; }
  /// +1 for t, -1 for t^-1, 0 for A letters.
  int sign() const { return kind == Kind::kT ? 1 : kind == Kind::kTInv ? -1 : 0; }

  friend auto operator<=>(const HLetter&, const HLetter&) = default;
};

using HWord = std::vector<HLetter>;

/// Slot form a_0 t^{e_1} a_1 ... t^{e_k} a_k with unit exponents; slots may
/// hold the identity.
struct Syllables {
  std::vector<Elem> slots;  // k + 1 entries
  std::vector<int> signs;   // k entries, each +1 or -1

  int t_count() const { return static_cast<int>(signs.size()); }
};

/// Canonical Britton-reduced form: reduced, and at each t-junction the
/// gauge makes the slot on its left the least element of its coset.
class HElement {
 public:
  HElement() = default;
  const HWord& word() const { return form_; }
  bool is_identity() const { return form_.empty(); }

  friend bool operator==(const HElement&, const HElement&) = default;
  friend auto operator<=>(const HElement&, const HElement&) = default;

 private:
  friend class HnnPresentation;
  explicit HElement(HWord form) : form_(std::move(form)) {}
  HWord form_;
};

/// Words equal to one element with the same t-pattern, parameterized by a
/// C value v_i at every t-letter. At a t-letter (+):
///   (a_{i-1}, a_i) -> (a_{i-1} phi(v), v^-1 a_i);
/// at a t^-1 letter (-):
///   (a_{i-1}, a_i) -> (a_{i-1} v, phi(v)^-1 a_i).
struct HGaugeOrbit {
  Syllables base;
  int c_order = 1;

  int junctions() const { return base.t_count(); }
  long long size() const;
};

enum class GeodesicCondition { kI, kII, kNeither };

/// G = A *_C phi = <A, t | c = t^-1 phi(c) t>. Acts as the group model for
/// the quasimorphism routines.
class HnnPresentation {
 public:
  using Letter = HLetter;
  using Word = HWord;
  using Element = HElement;

  /// inclusion: C -> A (C as an abstract group), phi: C -> A.
  HnnPresentation(FiniteGroup a, Embedding inclusion, Embedding phi);
  /// phi_on_c[k] is phi of the k-th smallest element of c.
  static HnnPresentation from_subgroup(const FiniteGroup& a, const Subgroup& c, std::vector<Elem> phi_on_c);

  const FiniteGroup& a() const { return a_; }
  const FiniteGroup& c() const { return incl_.source(); }
  const Embedding& inclusion() const { return incl_; }
  const Embedding& phi() const { return phi_; }
  bool in_c(Elem x) const { return incl_.image().contains(x); }
  bool in_phi_c(Elem x) const { return phi_.image().contains(x); }
  bool valid_letter(const HLetter& l) const;

  // Word-level operations.
  HWord britton_reduce(const HWord& w) const;
  /// Pinch-free and no two adjacent A-letters.
  bool is_reduced(const HWord& w) const;
  HWord inverse_word(const HWord& w) const;
  TPattern t_pattern(const HWord& w) const;
  Syllables syllables(const HWord& reduced) const;
  HWord assemble(const Syllables& s) const;

  // Element-level operations.
  HElement element(const HWord& w) const;
  HElement identity() const { return {}; }
  HElement multiply(const HElement& x, const HElement& y) const;
  HElement inverse(const HElement& x) const;
  /// Word problem by Britton's lemma: u v^-1 reduces to the empty word.
  bool equals(const HWord& u, const HWord& v) const;
  const HWord& word(const HElement& g) const { return g.word(); }

  HGaugeOrbit gauge_orbit(const HElement& g) const;
  /// Slot form for one gauge assignment (gauge.size() == orbit.junctions()).
  Syllables orbit_member(const HGaugeOrbit& orbit, const std::vector<Elem>& gauge) const;
  std::vector<HWord> enumerate_orbit(const HElement& g, long long cap = 1 << 20) const;

  /// Geodesic length: minimum over the gauge orbit of t-letters plus
  /// nontrivial slots, by dynamic programming over junction gauges.
  int length(const HElement& g) const;
  /// A word attaining length(g).
  HWord geodesic_word(const HElement& g) const;

  /// Classifies w = t^{n_1} a_1 ... t^{n_I} a_I. A missing final A-letter
  /// counts as the identity. Throws PreconditionError for other shapes.
  GeodesicCondition check_condition(const HWord& w) const;

  // Letter coding: t = 0, t^-1 = 1, a:x = x + 1.
  int alphabet_size() const { return a_.order() + 1; }
  int code(const HLetter& l) const {
    return l.kind == HLetter::Kind::kT ? 0 : l.kind == HLetter::Kind::kTInv ? 1 : l.value + 1;
  }
  HLetter letter(int code) const {
    return code == 0 ? HLetter::t() : code == 1 ? HLetter::t_inv() : HLetter::a(code - 1);
  }

  /// G^ab with one generator per element of A, then t.
  const AbelianQuotient& abelianization() const { return abelian_; }
  std::vector<long long> abelian_image(const HWord& w) const;
  bool in_commutator_subgroup(const HWord& w) const { return abelian_.is_zero(abelian_image(w)); }

  std::string format(const HWord& w) const;
  /// Parses "t a:2 T a:1"; the empty string is the identity.
  HWord parse(std::string_view text) const;

  /// Factor multiplied on the right of the slot before a t-letter of the
  /// given sign, and (inverted) on the left of the slot after it.
  Elem right_factor(int sign, Elem v) const { return sign > 0 ? phi_(v) : incl_(v); }
  Elem left_factor(int sign, Elem v) const { return a_.inv(sign > 0 ? incl_(v) : phi_(v)); }

 private:
  HWord canonical(const HWord& reduced) const;

  FiniteGroup a_;
  Embedding incl_, phi_;
  AbelianQuotient abelian_;
};

inline HWord britton_reduce(const HnnPresentation& p, const HWord& w) { return p.britton_reduce(w); }
inline bool equals_hnn(const HnnPresentation& p, const HWord& u, const HWord& v) { return p.equals(u, v); }
inline TPattern t_pattern(const HnnPresentation& p, const HWord& w) { return p.t_pattern(w); }
inline int geodesic_length_hnn(const HnnPresentation& p, const HElement& g) { return p.length(g); }
inline GeodesicCondition check_condition_I_II(const HnnPresentation& p, const HWord& w) {
  return p.check_condition(w);
}

}  // namespace qm

template <>
struct std::hash<qm::HElement> {
  std::size_t operator()(const qm::HElement& g) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (const auto& l : g.word())
      h = (h ^ (static_cast<std::size_t>(l.kind) * 257 + static_cast<std::size_t>(l.value))) * 0x100000001b3ull;
    return h;
  }
};
