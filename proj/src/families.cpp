#include "qm/families.hpp"

#include <algorithm>
#include <sstream>

#include "qm/error.hpp"

namespace qm {

long long family_block(int i) {
  long long p = 1;
  for (int k = 0; k < i; ++k) p *= kFamilyBase;
  return p;
}

namespace {

void check_index(int i, int max_index) {
  if (i < 0 || i > max_index)
    throw CapExceeded("family index " + std::to_string(i) + " outside [0, " + std::to_string(max_index) + "]");
}

void append_pairs(AWord& w, ALetter x, ALetter y, long long times) {
  for (long long k = 0; k < times; ++k) {
    w.push_back(x);
    w.push_back(y);
  }
}

void append_t(HWord& w, long long n) {
  for (long long k = 0; k < (n < 0 ? -n : n); ++k) w.push_back(n > 0 ? HLetter::t() : HLetter::t_inv());
}

template <class Word>
void append(Word& w, const Word& x) {
  w.insert(w.end(), x.begin(), x.end());
}

}  // namespace

AmalgamFamily validate_amalgam_params(const AmalgamPresentation& p, const AmalgamFamilyParams& params) {
  const auto& a = p.group(Side::A);
  const auto& b = p.group(Side::B);
  const auto& ca = p.iota(Side::A).image();
  const int c_order = p.c().order();
  auto fail = [](const std::string& msg) { throw ValidationError(msg); };

  const auto dc = double_cosets(a, ca, ca);
  if (dc.count() < 3) fail("|C\\A/C| = " + std::to_string(dc.count()) + " < 3");
  if (b.order() / c_order < 2) fail("|B/C| = " + std::to_string(b.order() / c_order) + " < 2");
  for (auto [name, x] : {std::pair{"a1", params.a1}, std::pair{"a2", params.a2}}) {
    if (!a.contains(x)) fail(std::string(name) + " = " + std::to_string(x) + " is not an element of A");
    if (ca.contains(x)) fail(std::string(name) + " = " + std::to_string(x) + " lies in C");
  }
  for (Elem c1 : ca.elements())
    for (Elem c2 : ca.elements())
      if (a.mul(a.mul(c1, params.a1), c2) == params.a2) {
        std::ostringstream os;
        os << "a2 lies in C a1 C: " << c1 << " * " << params.a1 << " * " << c2 << " = " << params.a2;
        fail(os.str());
      }
  if (!b.contains(params.b)) fail("b = " + std::to_string(params.b) + " is not an element of B");
  if (p.in_c(Side::B, params.b)) fail("b = " + std::to_string(params.b) + " lies in C");

  AmalgamFamily f;
  f.params = params;
  f.a1_inv = a.inv(params.a1);
  f.a2_inv = a.inv(params.a2);
  f.b_inv = b.inv(params.b);
  f.double_cosets = dc.count();
  return f;
}

AWord build_wi_amalgam(const AmalgamFamily& f, int i) {
  check_index(i, f.params.max_index);
  const long long p = family_block(i);
  const ALetter a1{Side::A, f.params.a1}, a1i{Side::A, f.a1_inv};
  const ALetter a2{Side::A, f.params.a2}, a2i{Side::A, f.a2_inv};
  const ALetter b{Side::B, f.params.b}, bi{Side::B, f.b_inv};
  AWord w;
  w.reserve(static_cast<std::size_t>(40 * p));
  for (long long k : {p, 4 * p}) {
    append_pairs(w, a1, b, k);
    append_pairs(w, a1i, bi, k);
    append_pairs(w, a2, b, k);
    append_pairs(w, a2i, bi, k);
  }
  return w;
}

AWord family_plus_block(const AmalgamFamily& f, int i) {
  check_index(i, f.params.max_index);
  AWord w;
  append_pairs(w, {Side::A, f.params.a1}, {Side::B, f.params.b}, 4 * family_block(i));
  return w;
}

AWord family_minus_block(const AmalgamFamily& f, int i) {
  check_index(i, f.params.max_index);
  AWord w;
  append_pairs(w, {Side::A, f.a1_inv}, {Side::B, f.b_inv}, 4 * family_block(i));
  return w;
}

SymbolPattern family_pattern(const AmalgamFamily& f, int i) {
  check_index(i, f.params.max_index);
  const long long p = family_block(i);
  SymbolPattern out;
  for (long long k : {p, 4 * p})
    for (Symbol s : {Symbol::kOne, Symbol::kOneBar, Symbol::kTwo, Symbol::kTwoBar})
      out.symbols.insert(out.symbols.end(), static_cast<std::size_t>(k), s);
  return out;
}

std::optional<Symbol> classify(const AmalgamFamily& f, const ALetter& l) {
  if (l.side == Side::B) {
    if (l.value == f.params.b || l.value == f.b_inv) return std::nullopt;
    throw ValidationError("B letter " + std::to_string(l.value) + " is not b or b^-1");
  }
  std::optional<Symbol> found;
  const std::pair<Elem, Symbol> table[] = {{f.params.a1, Symbol::kOne},
                                           {f.a1_inv, Symbol::kOneBar},
                                           {f.params.a2, Symbol::kTwo},
                                           {f.a2_inv, Symbol::kTwoBar}};
  for (auto [v, s] : table) {
    if (v != l.value) continue;
    if (found && *found != s)
      throw ValidationError("letter value " + std::to_string(l.value) + " is ambiguous between symbols '" +
                            symbol_char(*found) + "' and '" + symbol_char(s) + "'");
    found = s;
  }
  if (!found) throw ValidationError("A letter " + std::to_string(l.value) + " is outside the family alphabet");
  return found;
}

SymbolPattern symbol_pattern(const AmalgamFamily& f, const AWord& w) {
  SymbolPattern out;
  for (const auto& l : w)
    if (auto s = classify(f, l)) out.symbols.push_back(*s);
  return out;
}

AWord amalgam_commutator_certificate(const AmalgamFamily& f, int i) {
  check_index(i, f.params.max_index);
  const long long p = family_block(i);
  const ALetter b{Side::B, f.params.b}, bi{Side::B, f.b_inv};
  AWord w;
  for (long long k : {p, 4 * p})
    for (auto [a, ai] : {std::pair{f.params.a1, f.a1_inv}, std::pair{f.params.a2, f.a2_inv}}) {
      // [(a b)^k, b] = (a b)^k b (b^-1 a^-1)^k b^-1
      append_pairs(w, {Side::A, a}, b, k);
      w.push_back(b);
      append_pairs(w, bi, {Side::A, ai}, k);
      w.push_back(bi);
    }
  return w;
}

bool commutator_certificate_check(const AmalgamPresentation& p, const AmalgamFamily& f, int i) {
  const AWord w = build_wi_amalgam(f, i);
  return p.equals(w, amalgam_commutator_certificate(f, i)) && p.in_commutator_subgroup(w);
}

HnnFamily validate_hnn_params(const HnnPresentation& p, const HnnFamilyParams& params) {
  const auto& a = p.a();
  const int c_order = p.c().order();
  if (a.order() / c_order < 2)
    throw ValidationError("|A/C| = " + std::to_string(a.order() / c_order) + " < 2");
  // |phi(C)| = |C| since phi is injective.
  if (!a.contains(params.g) || params.g == 0) throw ValidationError("g must be a nonidentity element of A");
  if (!a.contains(params.h) || params.h == 0) throw ValidationError("h must be a nonidentity element of A");
  if (p.in_c(params.g)) throw ValidationError("g = " + std::to_string(params.g) + " lies in C");
  if (p.in_phi_c(params.h)) throw ValidationError("h = " + std::to_string(params.h) + " lies in phi(C)");
  return HnnFamily{params, a.inv(params.g), a.inv(params.h)};
}

HWord build_wi_hnn(const HnnFamily& f, int i) {
  check_index(i, f.params.max_index);
  const long long p = family_block(i);
  const HLetter g = HLetter::a(f.params.g), gi = HLetter::a(f.g_inv);
  const HLetter h = HLetter::a(f.params.h), hi = HLetter::a(f.h_inv);
  HWord w;
  // t^p g t^-p h | t^p g^-1 t^-p h^-1 | t^2p g t^-2p h | t^3p g^-1 t^-3p h^-1
  const std::tuple<long long, HLetter, HLetter> parts[] = {{p, g, h}, {p, gi, hi}, {2 * p, g, h}, {3 * p, gi, hi}};
  for (const auto& [n, x, y] : parts) {
    append_t(w, n);
    w.push_back(x);
    append_t(w, -n);
    w.push_back(y);
  }
  return w;
}

HWord hnn_commutator_certificate(const HnnPresentation& p, const HnnFamily& f, int i) {
  check_index(i, f.params.max_index);
  const long long n = family_block(i);
  auto tpow = [](long long k) {
    HWord w;
    append_t(w, k);
    return w;
  };
  auto letter = [](Elem x) { return HWord{HLetter::a(x)}; };
  auto comm = [&](const HWord& x, const HWord& y) {
    HWord w = x;
    append(w, y);
    append(w, p.inverse_word(x));
    append(w, p.inverse_word(y));
    return w;
  };
  const HWord g = letter(f.params.g), gi = letter(f.g_inv), h = letter(f.params.h);
  HWord gh = g;
  append(gh, h);
  const HWord t1 = tpow(n), t2 = tpow(2 * n), t3 = tpow(3 * n);
  HWord w;
  append(w, comm(t1, g));
  append(w, comm(gh, comm(t1, gi)));
  append(w, comm(t1, gi));
  append(w, comm(g, h));
  append(w, comm(t2, g));
  append(w, comm(gh, comm(t3, gi)));
  append(w, comm(t3, gi));
  append(w, comm(g, h));
  return w;
}

bool commutator_certificate_check(const HnnPresentation& p, const HnnFamily& f, int i) {
  const HWord w = build_wi_hnn(f, i);
  return p.equals(w, hnn_commutator_certificate(p, f, i)) && p.in_commutator_subgroup(w);
}

bool illegal_pair(Symbol text, Symbol probe) {
  auto is = [&](Symbol x, Symbol y) { return (text == x && probe == y) || (text == y && probe == x); };
  return is(Symbol::kOne, Symbol::kTwo) || is(Symbol::kOneBar, Symbol::kTwoBar);
}

bool CoverReport::cannot_cover() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const CoverVerdict& v) { return v.refuted(); });
}

int CoverReport::refuted_count() const {
  return static_cast<int>(std::count_if(verdicts.begin(), verdicts.end(), [](const CoverVerdict& v) { return v.refuted(); }));
}

void CoverReport::write_csv(std::ostream& os) const {
  os << "offset,refuting_index,text_sym,probe_sym\n";
  for (const auto& v : verdicts) {
    os << v.offset << ',' << v.refuting_index << ',';
    if (v.text_symbol) os << symbol_char(*v.text_symbol);
    os << ',';
    if (v.probe_symbol) os << symbol_char(*v.probe_symbol);
    os << '\n';
  }
}

CoverReport cover_refute(const SymbolPattern& text, const SymbolPattern& probe, Execution exec) {
  CoverReport rep{text, probe, {}};
  if (probe.size() > text.size()) return rep;
  const int offsets = static_cast<int>(text.size() - probe.size()) + 1;
  rep.verdicts.resize(offsets);
  auto check = [&](int o) {
    CoverVerdict v;
    v.offset = o;
    for (std::size_t j = 0; j < probe.size(); ++j) {
      const Symbol ts = text.symbols[o + j], ps = probe.symbols[j];
      if (illegal_pair(ts, ps)) {
        v.refuting_index = static_cast<int>(j);
        v.text_symbol = ts;
        v.probe_symbol = ps;
        break;
      }
    }
    rep.verdicts[o] = v;
  };
  if (exec == Execution::kSerial) {
    for (int o = 0; o < offsets; ++o) check(o);
  } else {
#pragma omp parallel for schedule(static)
    for (int o = 0; o < offsets; ++o) check(o);
  }
  return rep;
}

int consecutive_run_bound(const SymbolPattern& pattern) {
  int best = 0, run = 0;
  for (std::size_t k = 0; k < pattern.size(); ++k) {
    run = (k > 0 && pattern.symbols[k] == pattern.symbols[k - 1]) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

SeparationResult family_separation_check(const HnnPresentation& p, const HnnFamily& f, int i, int j, int max_n) {
  if (!(i < j)) throw PreconditionError("family_separation_check requires i < j");
  SeparationResult r;
  r.run_j = consecutive_run_bound(p.t_pattern(build_wi_hnn(f, j)));
  const TPattern wi = p.t_pattern(build_wi_hnn(f, i));
  r.separated = true;
  for (int n = 1; n <= max_n; ++n) {
    r.run_i_powers.push_back(consecutive_run_bound(wi.power(n)));
    if (r.run_i_powers.back() >= r.run_j) r.separated = false;
  }
  return r;
}

}  // namespace qm
