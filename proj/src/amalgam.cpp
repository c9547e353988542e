#include "qm/amalgam.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "qm/error.hpp"

namespace qm {

namespace {

void add_table_relations(IntMatrix& rel, const FiniteGroup& g, int offset, int cols) {
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) {
      std::vector<long long> row(cols, 0);
      row[offset + x] += 1;
      row[offset + y] += 1;
      row[offset + g.mul(x, y)] -= 1;
      rel.push_back(std::move(row));
    }
}

AbelianQuotient amalgam_abelianization(const FiniteGroup& a, const FiniteGroup& b, const Embedding& ia,
                                       const Embedding& ib) {
  const int cols = a.order() + b.order();
  IntMatrix rel;
  add_table_relations(rel, a, 0, cols);
  add_table_relations(rel, b, a.order(), cols);
  for (Elem c = 0; c < ia.source().order(); ++c) {
    std::vector<long long> row(cols, 0);
    row[ia(c)] += 1;
    row[a.order() + ib(c)] -= 1;
    rel.push_back(std::move(row));
  }
  return AbelianQuotient(rel, cols);
}

}  // namespace

long long AGaugeOrbit::size() const {
  long long s = 1;
  for (int j = 0; j < junctions(); ++j) {
    if (s > std::numeric_limits<long long>::max() / c_order) return std::numeric_limits<long long>::max();
    s *= c_order;
  }
  return s;
}

AmalgamPresentation::AmalgamPresentation(FiniteGroup a, FiniteGroup b, Embedding iota_a, Embedding iota_b)
    : a_(std::move(a)),
      b_(std::move(b)),
      iota_a_(std::move(iota_a)),
      iota_b_(std::move(iota_b)),
      abelian_(amalgam_abelianization(a_, b_, iota_a_, iota_b_)) {
  if (!(iota_a_.target() == a_) || !(iota_b_.target() == b_))
    throw ValidationError("embedding targets do not match the factors");
  if (!(iota_a_.source() == iota_b_.source()))
    throw ValidationError("embeddings must share the same source group C");
  for (Side s : {Side::A, Side::B}) {
    const auto& g = group(s);
    const auto& io = iota(s);
    auto& table = coset_min_[static_cast<int>(s)];
    table.resize(g.order());
    for (Elem x = 0; x < g.order(); ++x) {
      Elem best = -1, arg = 0;
      for (Elem c = 0; c < io.source().order(); ++c) {
        Elem y = g.mul(x, io(c));
        if (best < 0 || y < best) {
          best = y;
          arg = c;
        }
      }
      table[x] = {best, arg};
    }
  }
}

bool AmalgamPresentation::valid_letter(const ALetter& l) const {
  return l.value > 0 && l.value < group(l.side).order();
}

AWord AmalgamPresentation::reduce(const AWord& w) const {
  AWord st;
  st.reserve(w.size());
  for (ALetter x : w) {
    if (!valid_letter(x)) throw ValidationError("invalid letter in word");
    for (;;) {
      if (st.empty()) {
        st.push_back(x);
        break;
      }
      ALetter top = st.back();
      if (top.side == x.side) {
        st.pop_back();
        x.value = group(x.side).mul(top.value, x.value);
        if (x.value == 0) break;
        continue;
      }
      if (in_c(x.side, x.value)) {
        x = {top.side, iota(top.side)(iota(x.side).preimage(x.value))};
        continue;
      }
      if (in_c(top.side, top.value)) {
        // Only possible when top is the sole letter on the stack.
        st.pop_back();
        x.value = group(x.side).mul(iota(x.side)(iota(top.side).preimage(top.value)), x.value);
        if (x.value == 0) break;
        continue;
      }
      st.push_back(x);
      break;
    }
  }
  return st;
}

bool AmalgamPresentation::is_reduced(const AWord& w) const {
  if (w.size() <= 1) return true;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (in_c(w[i].side, w[i].value)) return false;
    if (i > 0 && w[i].side == w[i - 1].side) return false;
  }
  return true;
}

AWord AmalgamPresentation::inverse_word(const AWord& w) const {
  AWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.value = group(l.side).inv(l.value);
  return out;
}

AWord AmalgamPresentation::canonical(AWord w) const {
  if (w.size() == 1) {
    if (w[0].side == Side::B && in_c(Side::B, w[0].value)) w[0] = {Side::A, iota_a_(iota_b_.preimage(w[0].value))};
    return w;
  }
  Elem carry = 0;  // c_{i-1}, as an element of C
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Side s = w[i].side;
    const auto& g = group(s);
    Elem x = g.mul(iota(s)(carry), w[i].value);
    if (i + 1 == w.size()) {
      w[i].value = x;
      break;
    }
    auto [rep, c] = coset_min(s, x);
    // rep = x * iota(c), so this junction's gauge value is c^{-1}.
    w[i].value = rep;
    carry = this->c().inv(c);
  }
  return w;
}

AElement AmalgamPresentation::element(const AWord& w) const { return AElement(canonical(reduce(w))); }

AElement AmalgamPresentation::multiply(const AElement& x, const AElement& y) const {
  AWord w = x.word();
  w.insert(w.end(), y.word().begin(), y.word().end());
  return element(w);
}

AElement AmalgamPresentation::inverse(const AElement& x) const { return element(inverse_word(x.word())); }

AGaugeOrbit AmalgamPresentation::gauge_orbit(const AElement& g) const {
  return AGaugeOrbit{g.word(), c().order()};
}

AWord AmalgamPresentation::orbit_member(const AGaugeOrbit& orbit, const std::vector<Elem>& gauge) const {
  if (static_cast<int>(gauge.size()) != orbit.junctions()) throw ValidationError("gauge length mismatch");
  AWord w = orbit.base;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Side s = w[i].side;
    const auto& g = group(s);
    Elem left = i == 0 ? 0 : gauge[i - 1];
    Elem right = i + 1 == w.size() ? 0 : gauge[i];
    w[i].value = g.mul(g.mul(iota(s)(left), w[i].value), g.inv(iota(s)(right)));
  }
  return w;
}

std::vector<AWord> AmalgamPresentation::enumerate_geodesics(const AElement& g, long long cap) const {
  const AGaugeOrbit orbit = gauge_orbit(g);
  if (orbit.size() > cap)
    throw CapExceeded("gauge orbit of size " + std::to_string(orbit.size()) + " exceeds cap " +
                      std::to_string(cap) + "; use the dynamic-programming counting path instead");
  std::vector<AWord> out;
  if (g.word().size() == 1 && in_c(Side::A, g.word()[0].value)) {
    // Two spellings of a nontrivial element of C.
    out.push_back(g.word());
    out.push_back({{Side::B, iota_b_(iota_a_.preimage(g.word()[0].value))}});
    return out;
  }
  std::vector<Elem> gauge(orbit.junctions(), 0);
  for (;;) {
    out.push_back(orbit_member(orbit, gauge));
    std::size_t k = 0;
    while (k < gauge.size() && ++gauge[k] == orbit.c_order) gauge[k++] = 0;
    if (k == gauge.size()) break;
  }
  return out;
}

ALetter AmalgamPresentation::letter(int code) const {
  if (code < a_.order() - 1) return {Side::A, code + 1};
  return {Side::B, code - (a_.order() - 1) + 1};
}

std::vector<long long> AmalgamPresentation::abelian_image(const AWord& w) const {
  std::vector<long long> v(a_.order() + b_.order(), 0);
  for (const auto& l : w) v[(l.side == Side::A ? 0 : a_.order()) + l.value] += 1;
  return v;
}

std::string AmalgamPresentation::format(const AWord& w) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << (w[i].side == Side::A ? 'A' : 'B') << ':' << w[i].value;
  }
  return os.str();
}

AWord AmalgamPresentation::parse(std::string_view text) const {
  AWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (text[i] != 'A' && text[i] != 'B') throw ParseError("expected 'A:' or 'B:' letter", start);
    const Side s = text[i] == 'A' ? Side::A : Side::B;
    ++i;
    if (i >= text.size() || text[i] != ':') throw ParseError("expected ':' after side", i);
    ++i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected element index", i);
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1 << 20) throw ParseError("element index too large", start);
      ++i;
    }
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError("unexpected character", i);
    ALetter l{s, static_cast<Elem>(v)};
    if (!valid_letter(l)) throw ParseError("letter is the identity or out of range for its factor", start);
    w.push_back(l);
  }
  return w;
}

}  // namespace qm
