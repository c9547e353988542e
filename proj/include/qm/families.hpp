#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "qm/amalgam.hpp"
#include "qm/defect.hpp"
#include "qm/hnn.hpp"
#include "qm/symbol_pattern.hpp"

namespace qm {

/// Block exponent base; w_i uses blocks of 10^i.
inline constexpr int kFamilyBase = 10;
/// Default index cap: w_2 has 4000 letters.
inline constexpr int kDefaultMaxIndex = 2;

long long family_block(int i);

// Amalgam family:
//   w_i = (a1 b)^p (a1^-1 b^-1)^p (a2 b)^p (a2^-1 b^-1)^p
//         (a1 b)^4p (a1^-1 b^-1)^4p (a2 b)^4p (a2^-1 b^-1)^4p,  p = 10^i.

struct AmalgamFamilyParams {
  Elem a1 = 1;
  Elem a2 = 2;
  Elem b = 1;
  int max_index = kDefaultMaxIndex;
};

/// Parameters certified against the presentation: |C\A/C| >= 3,
/// |B/C| >= 2, a1, a2 in A \ C, a2 not in C a1 C, b in B \ C.
struct AmalgamFamily {
  AmalgamFamilyParams params;
  Elem a1_inv = 0, a2_inv = 0, b_inv = 0;
  int double_cosets = 0;
};

/// Throws ValidationError naming the violated condition and a witness.
AmalgamFamily validate_amalgam_params(const AmalgamPresentation& p, const AmalgamFamilyParams& params);

AWord build_wi_amalgam(const AmalgamFamily& f, int i);
/// w_i(1,+) = (a1 b)^{4p}.
AWord family_plus_block(const AmalgamFamily& f, int i);
/// w_i(1,-) = (a1^-1 b^-1)^{4p}.
AWord family_minus_block(const AmalgamFamily& f, int i);
/// W_i from the construction itself (exact even when a2 = a1^-1).
SymbolPattern family_pattern(const AmalgamFamily& f, int i);
/// Symbol class of a family letter from its value; nullopt for b^{+-1}.
/// Throws ValidationError for letters outside the alphabet or values that
/// name two different symbols.
std::optional<Symbol> classify(const AmalgamFamily& f, const ALetter& l);
SymbolPattern symbol_pattern(const AmalgamFamily& f, const AWord& w);
/// Product of commutators [(a1 b)^p, b][(a2 b)^p, b][(a1 b)^4p, b][(a2 b)^4p, b]
/// with [x, y] = x y x^-1 y^-1, which spells out to w_i.
AWord amalgam_commutator_certificate(const AmalgamFamily& f, int i);
bool commutator_certificate_check(const AmalgamPresentation& p, const AmalgamFamily& f, int i);

// HNN family:
//   w_i = t^p g t^-p h t^p g^-1 t^-p h^-1 t^2p g t^-2p h t^3p g^-1 t^-3p h^-1.

struct HnnFamilyParams {
  Elem g = 1;
  Elem h = 1;
  int max_index = kDefaultMaxIndex;
};

/// Certified: |A/C| >= 2, |A/phi(C)| >= 2, g in A \ C, h in A \ phi(C).
struct HnnFamily {
  HnnFamilyParams params;
  Elem g_inv = 0, h_inv = 0;
};

HnnFamily validate_hnn_params(const HnnPresentation& p, const HnnFamilyParams& params);
HWord build_wi_hnn(const HnnFamily& f, int i);
/// [T,g][gh,[T,g^-1]][T,g^-1][g,h][T^2,g][gh,[T^3,g^-1]][T^3,g^-1][g,h]
/// with T = t^p.
HWord hnn_commutator_certificate(const HnnPresentation& p, const HnnFamily& f, int i);
bool commutator_certificate_check(const HnnPresentation& p, const HnnFamily& f, int i);

// Covering calculus.

struct CoverVerdict {
  int offset = 0;
  int refuting_index = -1;  // probe position of the first illegal pair, -1 if none
  std::optional<Symbol> text_symbol, probe_symbol;
  bool refuted() const { return refuting_index >= 0; }
};

struct CoverReport {
  SymbolPattern text, probe;
  std::vector<CoverVerdict> verdicts;  // by offset, 0 .. |text| - |probe|

  /// True iff every alignment is refuted.
  bool cannot_cover() const;
  int refuted_count() const;
  /// Columns offset,refuting_index,text_sym,probe_sym.
  void write_csv(std::ostream& os) const;
};

/// The pairs (1,2), (2,1), (1bar,2bar), (2bar,1bar): a1 can never face a2 when
/// a2 is outside C a1 C, in either orientation.
bool illegal_pair(Symbol text, Symbol probe);

/// For every alignment of probe inside text, looks for an illegally facing
/// pair. Offsets are independent and evaluated with OpenMP.
CoverReport cover_refute(const SymbolPattern& text, const SymbolPattern& probe,
                         Execution exec = Execution::kParallel);

/// Longest run of one repeated symbol.
int consecutive_run_bound(const SymbolPattern& pattern);

struct SeparationResult {
  int run_j = 0;
  std::vector<int> run_i_powers;  // run(W_i^n), n = 1..max_n
  bool separated = false;         // run_j exceeds every run_i_powers entry
};

/// W_j has 3*10^j consecutive t's; W_i^n never more than 3*10^i.
SeparationResult family_separation_check(const HnnPresentation& p, const HnnFamily& f, int i, int j, int max_n = 3);

}  // namespace qm
