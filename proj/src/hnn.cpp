#include "qm/hnn.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "qm/error.hpp"

namespace qm {

namespace {

AbelianQuotient hnn_abelianization(const FiniteGroup& a, const Embedding& incl, const Embedding& phi) {
  const int cols = a.order() + 1;
  IntMatrix rel;
  for (Elem x = 0; x < a.order(); ++x)
    for (Elem y = 0; y < a.order(); ++y) {
      std::vector<long long> row(cols, 0);
      row[x] += 1;
      row[y] += 1;
      row[a.mul(x, y)] -= 1;
      rel.push_back(std::move(row));
    }
  for (Elem c = 0; c < incl.source().order(); ++c) {
    std::vector<long long> row(cols, 0);
    row[incl(c)] += 1;
    row[phi(c)] -= 1;
    rel.push_back(std::move(row));
  }
  return AbelianQuotient(rel, cols);
}

}  // namespace

long long HGaugeOrbit::size() const {
  long long s = 1;
  for (int j = 0; j < junctions(); ++j) {
    if (s > std::numeric_limits<long long>::max() / c_order) return std::numeric_limits<long long>::max();
    s *= c_order;
  }
  return s;
}

HnnPresentation::HnnPresentation(FiniteGroup a, Embedding inclusion, Embedding phi)
    : a_(std::move(a)),
      incl_(std::move(inclusion)),
      phi_(std::move(phi)),
      abelian_(hnn_abelianization(a_, incl_, phi_)) {
  if (!(incl_.target() == a_) || !(phi_.target() == a_))
    throw ValidationError("inclusion and phi must both map into A");
  if (!(incl_.source() == phi_.source())) throw ValidationError("inclusion and phi must share the source C");
}

HnnPresentation HnnPresentation::from_subgroup(const FiniteGroup& a, const Subgroup& c,
                                               std::vector<Elem> phi_on_c) {
  FiniteGroup cg = induced_group(a, c);
  Embedding incl(cg, a, c.elements());
  Embedding phi(cg, a, std::move(phi_on_c));
  return HnnPresentation(a, std::move(incl), std::move(phi));
}

bool HnnPresentation::valid_letter(const HLetter& l) const {
  return l.kind != HLetter::Kind::kA || (l.value > 0 && l.value < a_.order());
}

HWord HnnPresentation::britton_reduce(const HWord& w) const {
  HWord st;
  st.reserve(w.size());
  // Pushes one letter, collapsing merges and pinches against the stack top.
  auto push = [&](auto&& self, HLetter x) -> void {
    if (x.kind == HLetter::Kind::kA) {
      if (x.value == 0) return;
      if (!st.empty() && st.back().kind == HLetter::Kind::kA) {
        Elem y = a_.mul(st.back().value, x.value);
        st.pop_back();
        self(self, HLetter::a(y));
        return;
      }
      st.push_back(x);
      return;
    }
    const int s = x.sign();
    if (!st.empty() && st.back().sign() == -s) {  // t t^-1 or t^-1 t
      st.pop_back();
      return;
    }
    if (st.size() >= 2 && st.back().kind == HLetter::Kind::kA && st[st.size() - 2].sign() == -s) {
      const Elem a = st.back().value;
      if (s < 0 && in_c(a)) {  // t c t^-1 = phi(c)
        st.resize(st.size() - 2);
        self(self, HLetter::a(phi_(incl_.preimage(a))));
        return;
      }
      if (s > 0 && in_phi_c(a)) {  // t^-1 phi(c) t = c
        st.resize(st.size() - 2);
        self(self, HLetter::a(incl_(phi_.preimage(a))));
        return;
      }
    }
    st.push_back(x);
  };
  for (const HLetter& x : w) {
    if (!valid_letter(x)) throw ValidationError("invalid letter in HNN word");
    push(push, x);
  }
  return st;
}

bool HnnPresentation::is_reduced(const HWord& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_t()) {
      if (i > 0 && !w[i - 1].is_t()) return false;
      if (i > 0 && i + 1 < w.size() && w[i - 1].is_t() && w[i + 1].is_t()) {
        const int l = w[i - 1].sign(), r = w[i + 1].sign();
        if (l > 0 && r < 0 && in_c(w[i].value)) return false;
        if (l < 0 && r > 0 && in_phi_c(w[i].value)) return false;
      }
    } else if (i > 0 && w[i - 1].sign() == -w[i].sign()) {
      return false;
    }
  }
  return true;
}

HWord HnnPresentation::inverse_word(const HWord& w) const {
  HWord out(w.rbegin(), w.rend());
  for (auto& l : out) {
    if (l.kind == HLetter::Kind::kA)
      l.value = a_.inv(l.value);
    else
      l.kind = l.kind == HLetter::Kind::kT ? HLetter::Kind::kTInv : HLetter::Kind::kT;
  }
  return out;
}

TPattern HnnPresentation::t_pattern(const HWord& w) const {
  TPattern p;
  for (const auto& l : w)
    if (l.is_t()) p.symbols.push_back(l.sign() > 0 ? Symbol::kPlus : Symbol::kMinus);
  return p;
}

Syllables HnnPresentation::syllables(const HWord& w) const {
  Syllables s;
  s.slots.push_back(0);
  for (const auto& l : w) {
    if (l.is_t()) {
      s.signs.push_back(l.sign());
      s.slots.push_back(0);
    } else {
      s.slots.back() = a_.mul(s.slots.back(), l.value);
    }
  }
  return s;
}

HWord HnnPresentation::assemble(const Syllables& s) const {
  HWord w;
  for (std::size_t i = 0; i < s.slots.size(); ++i) {
    if (i > 0) w.push_back(s.signs[i - 1] > 0 ? HLetter::t() : HLetter::t_inv());
    if (s.slots[i] != 0) w.push_back(HLetter::a(s.slots[i]));
  }
  return w;
}

HWord HnnPresentation::canonical(const HWord& reduced) const {
  Syllables s = syllables(reduced);
  const int k = s.t_count();
  Elem carry = 0;  // left factor for the current slot
  for (int i = 0; i <= k; ++i) {
    Elem x = a_.mul(carry, s.slots[i]);
    if (i == k) {
      s.slots[i] = x;
      break;
    }
    const int sign = s.signs[i];
    Elem best = -1, arg = 0;
    for (Elem v = 0; v < c().order(); ++v) {
      Elem y = a_.mul(x, right_factor(sign, v));
      if (best < 0 || y < best) {
        best = y;
        arg = v;
      }
    }
    s.slots[i] = best;
    carry = left_factor(sign, arg);
  }
  return assemble(s);
}

HElement HnnPresentation::element(const HWord& w) const { return HElement(canonical(britton_reduce(w))); }

HElement HnnPresentation::multiply(const HElement& x, const HElement& y) const {
  HWord w = x.word();
  w.insert(w.end(), y.word().begin(), y.word().end());
  return element(w);
}

HElement HnnPresentation::inverse(const HElement& x) const { return element(inverse_word(x.word())); }

bool HnnPresentation::equals(const HWord& u, const HWord& v) const {
  HWord w = u;
  HWord vi = inverse_word(v);
  w.insert(w.end(), vi.begin(), vi.end());
  return britton_reduce(w).empty();
}

HGaugeOrbit HnnPresentation::gauge_orbit(const HElement& g) const {
  return HGaugeOrbit{syllables(g.word()), c().order()};
}

Syllables HnnPresentation::orbit_member(const HGaugeOrbit& orbit, const std::vector<Elem>& gauge) const {
  if (static_cast<int>(gauge.size()) != orbit.junctions()) throw ValidationError("gauge length mismatch");
  Syllables s = orbit.base;
  for (int j = 0; j < orbit.junctions(); ++j) {
    const int sign = s.signs[j];
    s.slots[j] = a_.mul(s.slots[j], right_factor(sign, gauge[j]));
    s.slots[j + 1] = a_.mul(left_factor(sign, gauge[j]), s.slots[j + 1]);
  }
  return s;
}

std::vector<HWord> HnnPresentation::enumerate_orbit(const HElement& g, long long cap) const {
  const HGaugeOrbit orbit = gauge_orbit(g);
  if (orbit.size() > cap)
    throw CapExceeded("gauge orbit of size " + std::to_string(orbit.size()) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<HWord> out;
  std::vector<Elem> gauge(orbit.junctions(), 0);
  for (;;) {
    out.push_back(assemble(orbit_member(orbit, gauge)));
    std::size_t k = 0;
    while (k < gauge.size() && ++gauge[k] == orbit.c_order) gauge[k++] = 0;
    if (k == gauge.size()) break;
  }
  return out;
}

namespace {

// Minimizes the number of nontrivial slots over junction gauges. Returns the
// optimal gauge assignment.
std::vector<Elem> min_slot_gauge(const HnnPresentation& p, const Syllables& base) {
  const int k = base.t_count();
  const int nc = p.c().order();
  if (k == 0) return {};
  const auto& a = p.a();
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  // cost[j][v]: best cost of slots 0..j with v_{j+1} = v (junction index j).
  std::vector<std::vector<int>> cost(k, std::vector<int>(nc, kInf));
  std::vector<std::vector<Elem>> from(k, std::vector<Elem>(nc, 0));
  for (Elem v = 0; v < nc; ++v) cost[0][v] = a.mul(base.slots[0], p.right_factor(base.signs[0], v)) != 0;
  for (int j = 1; j < k; ++j)
    for (Elem v = 0; v < nc; ++v)
      for (Elem u = 0; u < nc; ++u) {
        Elem slot = a.mul(a.mul(p.left_factor(base.signs[j - 1], u), base.slots[j]),
                          p.right_factor(base.signs[j], v));
        int c = cost[j - 1][u] + (slot != 0);
        if (c < cost[j][v]) {
          cost[j][v] = c;
          from[j][v] = u;
        }
      }
  int best = kInf;
  Elem arg = 0;
  for (Elem u = 0; u < nc; ++u) {
    Elem slot = a.mul(p.left_factor(base.signs[k - 1], u), base.slots[k]);
    int c = cost[k - 1][u] + (slot != 0);
    if (c < best) {
      best = c;
      arg = u;
    }
  }
  std::vector<Elem> gauge(k);
  gauge[k - 1] = arg;
  for (int j = k - 1; j > 0; --j) gauge[j - 1] = from[j][gauge[j]];
  return gauge;
}

}  // namespace

HWord HnnPresentation::geodesic_word(const HElement& g) const {
  HGaugeOrbit orbit = gauge_orbit(g);
  return assemble(orbit_member(orbit, min_slot_gauge(*this, orbit.base)));
}

int HnnPresentation::length(const HElement& g) const { return static_cast<int>(geodesic_word(g).size()); }

GeodesicCondition HnnPresentation::check_condition(const HWord& w) const {
  // Parse t^{n_1} a_1 ... t^{n_I} a_I.
  std::vector<int> exps;
  std::vector<Elem> as;
  std::size_t i = 0;
  if (w.empty()) throw PreconditionError("empty word is not in syllable form");
  while (i < w.size()) {
    if (!w[i].is_t()) throw PreconditionError("syllable must start with a t-power at letter " + std::to_string(i));
    const int s = w[i].sign();
    int n = 0;
    while (i < w.size() && w[i].is_t()) {
      if (w[i].sign() != s)
        throw PreconditionError("mixed-sign t-block at letter " + std::to_string(i));
      n += s;
      ++i;
    }
    exps.push_back(n);
    if (i < w.size()) {
      as.push_back(w[i].value);
      ++i;
    } else {
      as.push_back(0);
    }
  }
  auto holds = [&](int first_sign) {
    for (std::size_t k = 0; k < exps.size(); ++k) {
      const bool odd = k % 2 == 0;  // 1-based odd position
      const int want = odd ? first_sign : -first_sign;
      if ((exps[k] > 0 ? 1 : -1) != want) return false;
      if (as[k] == 0) return false;
      // Condition I: odd slots avoid C, even avoid phi(C); II swaps the roles.
      const bool avoid_c = (first_sign > 0) == odd;
      if (avoid_c ? in_c(as[k]) : in_phi_c(as[k])) return false;
    }
    return true;
  };
  if (holds(+1)) return GeodesicCondition::kI;
  if (holds(-1)) return GeodesicCondition::kII;
  return GeodesicCondition::kNeither;
}

std::vector<long long> HnnPresentation::abelian_image(const HWord& w) const {
  std::vector<long long> v(a_.order() + 1, 0);
  for (const auto& l : w) {
    if (l.is_t())
      v[a_.order()] += l.sign();
    else
      v[l.value] += 1;
  }
  return v;
}

std::string HnnPresentation::format(const HWord& w) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    if (w[i].kind == HLetter::Kind::kT)
      os << 't';
    else if (w[i].kind == HLetter::Kind::kTInv)
      os << 'T';
    else
      os << "a:" << w[i].value;
  }
  return os.str();
}

HWord HnnPresentation::parse(std::string_view text) const {
  HWord w;
  std::size_t i = 0;
  auto at_boundary = [&](std::size_t j) { return j >= text.size() || std::isspace(static_cast<unsigned char>(text[j])); };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if ((text[i] == 't' || text[i] == 'T') && at_boundary(i + 1)) {
      w.push_back(text[i] == 't' ? HLetter::t() : HLetter::t_inv());
      ++i;
      continue;
    }
    if (text[i] != 'a') throw ParseError("expected 't', 'T' or 'a:<index>'", start);
    ++i;
    if (i >= text.size() || text[i] != ':') throw ParseError("expected ':' after 'a'", i);
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected element index", i);
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1 << 20) throw ParseError("element index too large", start);
      ++i;
    }
    if (!at_boundary(i)) throw ParseError("unexpected character", i);
    HLetter l = HLetter::a(static_cast<Elem>(v));
    if (!valid_letter(l)) throw ParseError("letter is the identity or out of range for A", start);
    w.push_back(l);
  }
  return w;
}

}  // namespace qm
