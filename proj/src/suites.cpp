#include "qm/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "qm/cayley.hpp"
#include "qm/defect.hpp"
#include "qm/error.hpp"
#include "qm/quasimorphism.hpp"

namespace qm {

bool SuiteReport::passed() const {
  return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
}

int SuiteReport::failures() const {
  return static_cast<int>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
}

nlohmann::json SuiteReport::to_json(bool with_timing) const {
  nlohmann::json out{{"instance", instance}, {"seed", seed}, {"passed", passed()}, {"failures", failures()}};
  if (with_timing) out["wall_seconds"] = wall_seconds;
  auto& rows = out["records"] = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json row{{"id", r.id},           {"anchor", r.anchor}, {"instance", r.instance},
                       {"parameters", r.parameters}, {"expected", r.expected}, {"actual", r.actual},
                       {"pass", r.pass}};
    if (!r.witness.empty()) row["witness"] = r.witness;
    rows.push_back(std::move(row));
  }
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void SuiteReport::write_csv(std::ostream& os) const {
  os << "check_id,anchor,instance,parameters,expected,actual,pass,witness\n";
  for (const auto& r : records)
    os << csv_field(r.id) << ',' << csv_field(r.anchor) << ',' << csv_field(r.instance) << ','
       << csv_field(r.parameters.dump()) << ',' << csv_field(r.expected) << ',' << csv_field(r.actual) << ','
       << (r.pass ? "pass" : "fail") << ',' << csv_field(r.witness) << '\n';
}

namespace {

using nlohmann::json;

class Recorder {
 public:
  Recorder(SuiteReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

  void add(const std::string& check, std::string anchor, json params, std::string expected, std::string actual,
           bool pass, std::string witness = {}) {
    report_.records.push_back({suite_ + "/" + check, std::move(anchor), report_.instance, std::move(params),
                               std::move(expected), std::move(actual), pass, pass ? std::string() : std::move(witness)});
  }

  void equal(const std::string& check, std::string anchor, json params, long long expected, long long actual,
             std::string witness = {}) {
    add(check, std::move(anchor), std::move(params), std::to_string(expected), std::to_string(actual),
        expected == actual, std::move(witness));
  }

 private:
  SuiteReport& report_;
  std::string suite_;
};

/// Counts violations of a sampled property and keeps the first witness.
struct Tally {
  long long checked = 0;
  long long violations = 0;
  long long worst = 0;  // largest observed value of the checked quantity
  std::string witness;

  void observe(bool ok, long long value, const std::function<std::string()>& describe) {
    ++checked;
    worst = std::max(worst, value);
    if (!ok && violations++ == 0) witness = describe();
  }
  bool ok() const { return violations == 0; }
  std::string summary() const {
    return std::to_string(checked) + " checked, " + std::to_string(violations) + " violations, max " +
           std::to_string(worst);
  }
};

/// Calls f on every word of length <= max_length, shortest first within
/// each branch (depth-first in letter-code order).
template <GroupModel M, class F>
void for_each_word(const M& m, int max_length, F&& f) {
  typename M::Word w;
  auto visit = [&](auto&& self) -> void {
    f(static_cast<const typename M::Word&>(w));
    if (static_cast<int>(w.size()) == max_length) return;
    for (int c = 0; c < m.alphabet_size(); ++c) {
      w.push_back(m.letter(c));
      self(self);
      w.pop_back();
    }
  };
  visit(visit);
}

AWord geodesic_word(const AmalgamPresentation& p, const AElement& g) { return p.word(g); }
HWord geodesic_word(const HnnPresentation& p, const HElement& g) { return p.geodesic_word(g); }

AWord family_word(const AmalgamInstance& in, int i) { return build_wi_amalgam(in.family, i); }
HWord family_word(const HnnInstance& in, int i) { return build_wi_hnn(in.family, i); }

const AmalgamPresentation& model(const AmalgamInstance& in) { return in.presentation; }
const HnnPresentation& model(const HnnInstance& in) { return in.presentation; }

/// Short admissible pattern (its square is reduced) plus the first family word.
std::vector<std::pair<std::string, AWord>> sample_patterns(const AmalgamInstance& in) {
  const auto& f = in.family.params;
  AWord shortw{{Side::A, f.a1}, {Side::B, f.b}};
  return {{in.presentation.format(shortw), shortw}, {"w0", family_word(in, 0)}};
}

std::vector<std::pair<std::string, HWord>> sample_patterns(const HnnInstance& in) {
  HWord shortw{HLetter::t(), HLetter::a(in.family.params.g)};
  return {{in.presentation.format(shortw), shortw}, {"w0", family_word(in, 0)}};
}

/// Per-suite stream: seed mixed with an FNV-1a hash of the suite name.
std::uint64_t suite_seed(std::uint64_t seed, std::string_view suite) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : suite) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ull;
  return seed ^ h;
}

template <GroupModel M>
std::string pair_text(const M& m, const typename M::Element& x, const typename M::Element& y) {
  return "x = [" + m.format(m.word(x)) + "], y = [" + m.format(m.word(y)) + "]";
}

// Sampled inequalities.

template <class I>
void suite_lipschitz(const I& in, const Caps& caps, Recorder& rec) {
  const auto& m = model(in);
  for (const auto& [name, word] : sample_patterns(in)) {
    const Pattern pat(m, word);
    std::mt19937_64 rng(suite_seed(caps.seed, "lipschitz"));
    Tally c_tally, h_tally;
    for (long long s = 0; s < caps.samples; ++s) {
      const auto g = m.element(random_word(m, rng, caps.max_len));
      const auto g2 = m.multiply(g, m.element(random_word(m, rng, 6)));
      const int d = m.length(m.multiply(m.inverse(g), g2));
      const auto v = qm_value(m, g, pat), v2 = qm_value(m, g2, pat);
      const int dc = std::abs(v.c_plus - v2.c_plus), dh = std::abs(v.h() - v2.h());
      c_tally.observe(dc <= 2 * d, dc, [&] { return pair_text(m, g, g2); });
      h_tally.observe(dh <= 4 * d, dh, [&] { return pair_text(m, g, g2); });
    }
    const json params{{"pattern", name}, {"samples", caps.samples}, {"seed", caps.seed}, {"max_len", caps.max_len}};
    rec.add("c-lipschitz", "|c_w(g) - c_w(g')| <= 2 d(g, g')", params, "0 violations", c_tally.summary(),
            c_tally.ok(), c_tally.witness);
    rec.add("h-lipschitz", "|h_w(g) - h_w(g')| <= 4 d(g, g')", params, "0 violations", h_tally.summary(),
            h_tally.ok(), h_tally.witness);
  }
}

template <class I>
void suite_symmetry(const I& in, const Caps& caps, Recorder& rec) {
  const auto& m = model(in);
  for (const auto& [name, word] : sample_patterns(in)) {
    const Pattern pat(m, word);
    std::mt19937_64 rng(suite_seed(caps.seed, "symmetry"));
    Tally inv, anti, range;
    for (long long s = 0; s < caps.samples; ++s) {
      const auto g = m.element(random_word(m, rng, caps.max_len));
      const auto gi = m.inverse(g);
      const auto v = qm_value(m, g, pat), vi = qm_value(m, gi, pat);
      auto show = [&] { return "g = [" + m.format(m.word(g)) + "]"; };
      inv.observe(v.c_plus == vi.c_minus, std::abs(v.c_plus - vi.c_minus), show);
      anti.observe(v.h() == -vi.h(), std::abs(v.h() + vi.h()), show);
      const int cap = m.length(g) / pat.length();
      range.observe(v.c_plus >= 0 && v.c_plus <= cap && v.c_minus >= 0 && v.c_minus <= cap, v.c_plus, show);
    }
    const json params{{"pattern", name}, {"samples", caps.samples}, {"seed", caps.seed}, {"max_len", caps.max_len}};
    rec.add("inversion", "c_w(g) = c_{w^-1}(g^-1)", params, "0 violations", inv.summary(), inv.ok(), inv.witness);
    rec.add("antisymmetry", "h_w(g) = -h_w(g^-1)", params, "0 violations", anti.summary(), anti.ok(),
            anti.witness);
    rec.add("range", "0 <= c_w(g) <= |g| / |w|", params, "0 violations", range.summary(), range.ok(),
            range.witness);
  }
}

template <class I>
void suite_split(const I& in, const Caps& caps, Recorder& rec) {
  const auto& m = model(in);
  for (const auto& [name, word] : sample_patterns(in)) {
    const Pattern pat(m, word);
    std::mt19937_64 rng(suite_seed(caps.seed, "split"));
    Tally additive, bound;
    for (long long s = 0; s < caps.samples; ++s) {
      const auto g = m.element(random_word(m, rng, caps.max_len));
      const auto geo = geodesic_word(m, g);
      const auto k = static_cast<std::ptrdiff_t>(draw_below(rng, geo.size() + 1));
      const auto g1 = m.element({geo.begin(), geo.begin() + k});
      const auto g2 = m.element({geo.begin() + k, geo.end()});
      auto show = [&] { return pair_text(m, g1, g2); };
      additive.observe(m.length(g1) + m.length(g2) == m.length(g), 0, show);
      const int dev = std::abs(h_w(m, g, pat) - h_w(m, g1, pat) - h_w(m, g2, pat));
      bound.observe(dev <= 10, dev, show);
    }
    const json params{{"pattern", name}, {"samples", caps.samples}, {"seed", caps.seed}, {"max_len", caps.max_len}};
    rec.add("geodesic-split", "splitting a geodesic gives |g| = |g1| + |g2|", params, "0 violations",
            additive.summary(), additive.ok(), additive.witness);
    rec.add("h-split", "|h_w(g1 g2) - h_w(g1) - h_w(g2)| <= 10 when |g1 g2| = |g1| + |g2|", params, "0 violations",
            bound.summary(), bound.ok(), bound.witness);
  }
}

template <class I>
void suite_defect(const I& in, const Caps& caps, Recorder& rec) {
  const auto& m = model(in);
  for (const auto& [name, word] : sample_patterns(in)) {
    const Pattern pat(m, word);
    const std::vector<DefectStrategy> strategies{ExhaustiveStrategy{caps.radius},
                                                 RandomStrategy{caps.random_pairs, caps.max_len, caps.seed}};
    for (const auto& strategy : strategies) {
      const auto rep = defect_scan(m, pat, strategy, Execution::kParallel, name);
      std::string witness;
      if (rep.witness) witness = "x = [" + rep.witness->first + "], y = [" + rep.witness->second + "]";
      rec.add(strategy.index() == 0 ? "exhaustive" : "random", "|delta h_w(x, y)| <= 78",
              {{"pattern", name}, {"strategy", rep.strategy}},
              "observed_max <= " + std::to_string(kDefectBound),
              "observed_max = " + std::to_string(rep.observed_max) + " over " + std::to_string(rep.samples) +
                  " pairs",
              rep.passed(), witness);
    }
  }
}

template <class I>
void suite_oracle(const I& in, const Caps& caps, Recorder& rec) {
  const auto& m = model(in);
  using Word = typename std::decay_t<decltype(m)>::Word;
  const long long k = m.alphabet_size();
  auto words_up_to = [&](int depth) {
    long long total = 1, layer = 1;
    for (int d = 0; d < depth && total <= caps.node_cap; ++d) total += (layer *= k);
    return total;
  };
  // The realizer bound for |w| = 2 is 2|g|; shrink the radius to fit the cap.
  int radius = caps.oracle_radius;
  while (radius > 1 && words_up_to(2 * radius) > caps.node_cap) --radius;
  const ExhaustiveOracle oracle(m, 2 * radius, caps.node_cap);

  std::vector<Word> patterns;
  for_each_word(m, caps.pattern_max_len, [&](const Word& w) {
    if (w.size() >= 2 && m.is_reduced(concat<std::decay_t<decltype(m)>>(w, w))) patterns.push_back(w);
  });
  std::vector<typename std::decay_t<decltype(m)>::Element> elements;
  for (const auto& g : oracle.elements())
    if (oracle.shortest(g) <= radius) elements.push_back(g);

  Tally length_tally, c_tally;
  for (const auto& g : elements)
    length_tally.observe(m.length(g) == oracle.shortest(g), std::abs(m.length(g) - oracle.shortest(g)),
                         [&] { return "g = [" + m.format(m.word(g)) + "]"; });
  for (const auto& w : patterns) {
    const Pattern pat(m, w);
    for (const auto& g : elements) {
      const int dp = c_w(m, g, pat), brute = oracle.c_w(m, g, w);
      c_tally.observe(dp == brute, std::abs(dp - brute), [&] {
        return "w = [" + m.format(w) + "], g = [" + m.format(m.word(g)) + "], dp " + std::to_string(dp) +
               ", oracle " + std::to_string(brute);
      });
    }
  }
  const json params{{"radius", radius}, {"requested_radius", caps.oracle_radius},
                    {"pattern_max_len", caps.pattern_max_len}, {"patterns", patterns.size()},
                    {"elements", elements.size()}};
  rec.add("geodesic-length", "geodesic length equals the shortest enumerated word", params, "0 mismatches",
          length_tally.summary(), length_tally.ok(), length_tally.witness);
  rec.add("c_w", "dynamic-programming c_w equals exhaustive c_w", params, "0 mismatches", c_tally.summary(),
          c_tally.ok(), c_tally.witness);
}

template <class I>
void ball_check(const I& in, int radius, Recorder& rec) {
  const auto& m = model(in);
  Tally tally;
  for (const auto& [g, d] : cayley_ball(m, radius))
    tally.observe(m.length(g) == d, d, [&, &g = g] { return "g = [" + m.format(m.word(g)) + "]"; });
  rec.add("cayley-ball", "geodesic length equals breadth-first distance", {{"radius", radius}}, "0 mismatches",
          tally.summary(), tally.ok(), tally.witness);
}

template <class I>
void family_values(const I& in, const Caps& caps, Recorder& rec, bool with_c) {
  const auto& m = model(in);
  using M = std::decay_t<decltype(m)>;
  const std::string h_anchor = "h_{w_i}(w_i^n) = n";
  std::vector<Pattern<M>> pats;
  for (int j = 0; j <= caps.max_index; ++j) pats.emplace_back(m, family_word(in, j));
  for (int i = 0; i <= caps.value_max_i && i <= caps.max_index; ++i) {
    for (int n = 1; n <= caps.max_n; ++n) {
      const auto g = m.element(power(m, family_word(in, i), n));
      const auto v = qm_value(m, g, pats[i]);
      const json params{{"i", i}, {"n", n}};
      if (with_c) {
        rec.equal("c_wi(wi^n)", "c_{w_i}(w_i^n) = n", params, n, v.c_plus);
        rec.equal("c_wi^-1(wi^n)", "c_{w_i^-1}(w_i^n) = 0", params, 0, v.c_minus);
      } else {
        rec.equal("h_wi(wi^n)", h_anchor, params, n, v.h());
      }
      if (n > caps.cross_max_n) continue;
      for (int j = i + 1; j <= caps.max_index; ++j) {
        const auto vj = qm_value(m, g, pats[j]);
        const json cross{{"i", i}, {"j", j}, {"n", n}};
        if (with_c) {
          rec.equal("c_wj(wi^n)", "c_{w_j}(w_i^n) = 0 for j > i", cross, 0, vj.c_plus);
          rec.equal("c_wj^-1(wi^n)", "c_{w_j^-1}(w_i^n) = 0 for j > i", cross, 0, vj.c_minus);
        } else {
          rec.equal("h_wj(wi^n)", "h_{w_j}(w_i^n) = 0 for j > i", cross, 0, vj.h());
        }
      }
    }
  }
}

template <class I>
void family_abelian(const I& in, const Caps& caps, Recorder& rec, const std::string& check) {
  const auto& m = model(in);
  for (int i = 0; i <= caps.max_index; ++i) {
    const auto w = family_word(in, i);
    const bool zero = m.in_commutator_subgroup(w);
    rec.add(check, "w_i lies in [G, G]", {{"i", i}}, "image 0", zero ? "image 0" : "image nonzero", zero,
            "w_" + std::to_string(i));
  }
}

// Amalgam-only suites.

void suite_lemma31(const AmalgamInstance& in, const Caps& caps, Recorder& rec) {
  const auto& p = in.presentation;
  Tally tally;
  long long reduced = 0;
  for_each_word(p, caps.word_radius, [&](const AWord& w) {
    const bool red = p.is_reduced(w);
    const bool geo = p.length(p.element(w)) == static_cast<int>(w.size());
    reduced += red;
    tally.observe(red == geo, 0, [&] {
      return "[" + p.format(w) + "] " + (red ? "reduced but not geodesic" : "geodesic but not reduced");
    });
  });
  rec.add("reduced-iff-geodesic", "a word is reduced iff it is a geodesic",
          {{"max_word_length", caps.word_radius}, {"reduced_words", reduced}}, "0 mismatches", tally.summary(),
          tally.ok(), tally.witness);
  ball_check(in, caps.ball_radius, rec);
}

void suite_lemma41(const AmalgamInstance& in, const Caps& caps, Recorder& rec) {
  const auto& p = in.presentation;
  for (int i = 0; i <= caps.max_index; ++i) {
    const long long blk = family_block(i);
    const auto w = family_word(in, i);
    rec.equal("length", "|w_i| = 40 * 10^i", {{"i", i}}, 40 * blk, static_cast<long long>(w.size()));
    rec.equal("block-plus", "|w_i(1,+)| = 8 * 10^i", {{"i", i}}, 8 * blk,
              static_cast<long long>(family_plus_block(in.family, i).size()));
    rec.equal("block-minus", "|w_i(1,-)| = 8 * 10^i", {{"i", i}}, 8 * blk,
              static_cast<long long>(family_minus_block(in.family, i).size()));
    for (int n = 1; n <= caps.max_n; ++n) {
      const auto wn = power(p, w, n);
      const bool red = p.is_reduced(wn);
      rec.add("reduced-power", "w_i^n is reduced", {{"i", i}, {"n", n}}, "reduced",
              red ? "reduced" : "not reduced", red, "w_" + std::to_string(i) + "^" + std::to_string(n));
      if (i <= caps.value_max_i)
        rec.equal("geodesic-power", "|w_i^n| = n |w_i|", {{"i", i}, {"n", n}}, static_cast<long long>(wn.size()),
                  p.length(p.element(wn)));
    }
    const bool cert = commutator_certificate_check(p, in.family, i);
    rec.add("commutators", "w_i is a product of commutators", {{"i", i}}, "true", cert ? "true" : "false", cert,
            "w_" + std::to_string(i));
  }
  const auto w0 = family_pattern(in.family, 0);
  rec.add("W0", "symbol pattern of w_0", json::object(), "1!2@1111!!!!2222@@@@", w0.to_string(),
          w0.to_string() == "1!2@1111!!!!2222@@@@");
  rec.add("W0-inverse", "symbol pattern of w_0^-1", json::object(), "2222@@@@1111!!!!2@1!",
          w0.inverse().to_string(), w0.inverse().to_string() == "2222@@@@1111!!!!2@1!");
  // Reading classes back from letter values only works when the four
  // values a1^{+-1}, a2^{+-1} are distinct.
  const auto& f = in.family;
  const std::set<Elem> values{f.params.a1, f.a1_inv, f.params.a2, f.a2_inv};
  if (values.size() == 4) {
    for (int i = 0; i <= std::min(1, caps.max_index); ++i) {
      const auto w = family_word(in, i);
      const auto pat = family_pattern(f, i);
      const bool base = symbol_pattern(f, w) == pat;
      const bool pw = symbol_pattern(f, power(p, w, 3)) == pat.power(3);
      const bool inv = symbol_pattern(f, p.inverse_word(w)) == pat.inverse();
      rec.add("symbols-from-letters", "symbol_pattern(w_i^n) = W_i^n and symbol_pattern(w_i^-1) = W_i^-1",
              {{"i", i}}, "true", base && pw && inv ? "true" : "false", base && pw && inv,
              "w_" + std::to_string(i));
    }
  }
}

void suite_lemma42(const AmalgamInstance& in, const Caps& caps, Recorder& rec) {
  for (int i = 0; i <= caps.max_index; ++i) {
    const auto wi = family_pattern(in.family, i);
    const auto rep = cover_refute(wi.power(2), wi.inverse());
    const long long offsets = 20 * family_block(i) + 1;
    std::string witness;
    for (const auto& v : rep.verdicts)
      if (!v.refuted()) {
        witness = "offset " + std::to_string(v.offset) + " not refuted";
        break;
      }
    rec.add("cannot-cover", "W_i^2 cannot cover W_i^-1: every offset has an illegal facing pair", {{"i", i}},
            std::to_string(offsets) + " of " + std::to_string(offsets) + " offsets refuted",
            std::to_string(rep.refuted_count()) + " of " + std::to_string(rep.verdicts.size()) + " offsets refuted",
            rep.cannot_cover() && static_cast<long long>(rep.verdicts.size()) == offsets, witness);
  }
  const auto w0 = family_pattern(in.family, 0);
  const auto self = cover_refute(w0, w0);
  rec.add("self-alignment", "a letter never illegally faces itself", json::object(), "offset 0 not refuted",
          self.verdicts.at(0).refuted() ? "offset 0 refuted" : "offset 0 not refuted", !self.verdicts.at(0).refuted());
}

// HNN-only suites.

void suite_lemma61(const HnnInstance& in, const Caps& caps, Recorder& rec) {
  const auto& p = in.presentation;
  std::mt19937_64 rng(suite_seed(caps.seed, "lemma61"));
  Tally nontrivial, idempotent;
  long long produced = 0, attempts = 0;
  while (produced < caps.britton_samples && attempts < 1000 * caps.britton_samples) {
    ++attempts;
    Syllables s;
    const int k = 1 + static_cast<int>(draw_below(rng, 8));
    for (int j = 0; j < k; ++j) s.signs.push_back(draw_below(rng, 2) ? 1 : -1);
    for (int j = 0; j <= k; ++j) s.slots.push_back(static_cast<Elem>(draw_below(rng, p.a().order())));
    const HWord w = p.assemble(s);
    if (!p.is_reduced(w)) continue;
    ++produced;
    auto show = [&] { return "[" + p.format(w) + "]"; };
    nontrivial.observe(!p.equals(w, {}), 0, show);
    idempotent.observe(p.britton_reduce(w) == w, 0, show);
  }
  const json params{{"samples", produced}, {"seed", caps.seed}};
  rec.add("britton", "a reduced word with a t-letter is not the identity", params,
          std::to_string(caps.britton_samples) + " checked, 0 violations", nontrivial.summary(),
          nontrivial.ok() && produced == caps.britton_samples, nontrivial.witness);
  rec.add("reduce-fixes-reduced", "britton_reduce leaves reduced words unchanged", params, "0 violations",
          idempotent.summary(), idempotent.ok(), idempotent.witness);
}

void suite_lemma62(const HnnInstance& in, const Caps& caps, Recorder& rec) {
  const auto& p = in.presentation;
  std::map<HElement, std::vector<HWord>> buckets;
  for_each_word(p, caps.word_radius, [&](const HWord& w) {
    if (p.is_reduced(w)) buckets[p.element(w)].push_back(w);
  });
  Tally align, orbit, equal;
  for (const auto& [g, words] : buckets) {
    const auto pattern = p.t_pattern(words.front());
    const auto members = p.enumerate_orbit(g, caps.orbit_cap);
    const std::set<HWord> orbit_set(members.begin(), members.end());
    for (const auto& w : words) {
      auto show = [&] { return "[" + p.format(words.front()) + "] vs [" + p.format(w) + "]"; };
      equal.observe(p.equals(w, words.front()), 0, show);
      align.observe(p.t_pattern(w) == pattern, 0, show);
      orbit.observe(orbit_set.count(w) > 0, 0, [&] { return "[" + p.format(w) + "] missing from its orbit"; });
    }
  }
  const json params{{"max_word_length", caps.word_radius}, {"elements", buckets.size()}};
  rec.add("same-element", "bucketed reduced words are equal", params, "0 violations", equal.summary(), equal.ok(),
          equal.witness);
  rec.add("t-pattern", "equal reduced words share their t-pattern", params, "0 violations", align.summary(),
          align.ok(), align.witness);
  rec.add("orbit-complete", "every reduced word for g lies in the gauge orbit of g", params, "0 violations",
          orbit.summary(), orbit.ok(), orbit.witness);
}

void suite_lemma63(const HnnInstance& in, const Caps& caps, Recorder& rec) {
  const auto& p = in.presentation;
  Tally tally;
  for_each_word(p, caps.word_radius, [&](const HWord& w) {
    if (p.length(p.element(w)) != static_cast<int>(w.size())) return;
    tally.observe(p.is_reduced(w), 0, [&] { return "[" + p.format(w) + "] geodesic but not reduced"; });
  });
  rec.add("geodesic-reduced", "every geodesic word is reduced", {{"max_word_length", caps.word_radius}},
          "0 violations", tally.summary(), tally.ok(), tally.witness);
  ball_check(in, caps.ball_radius, rec);
}

void suite_lemma71(const HnnInstance& in, const Caps&, Recorder& rec) {
  const auto& p = in.presentation;
  const auto& a = p.a();
  for (int condition = 1; condition <= 2; ++condition) {
    Tally length, classified;
    long long words = 0;
    // Odd syllables take sign s, even ones -s; the slot after a t-run of
    // sign + avoids C, after - avoids phi(C).
    const int s = condition == 1 ? 1 : -1;
    std::vector<int> exps;
    std::vector<Elem> slots;
    auto visit = [&](auto&& self, int syl) -> void {
      if (syl > 0) {
        HWord w;
        for (int j = 0; j < syl; ++j) {
          for (int r = 0; r < std::abs(exps[j]); ++r) w.push_back(exps[j] > 0 ? HLetter::t() : HLetter::t_inv());
          w.push_back(HLetter::a(slots[j]));
        }
        ++words;
        auto show = [&] { return "[" + p.format(w) + "]"; };
        length.observe(p.length(p.element(w)) == static_cast<int>(w.size()), 0, show);
        const auto want = condition == 1 ? GeodesicCondition::kI : GeodesicCondition::kII;
        classified.observe(p.check_condition(w) == want, 0, show);
      }
      if (syl == 4) return;
      const int sign = syl % 2 == 0 ? s : -s;
      for (int mag = 1; mag <= 2; ++mag)
        for (Elem x = 1; x < a.order(); ++x) {
          if (sign > 0 ? p.in_c(x) : p.in_phi_c(x)) continue;
          exps.push_back(sign * mag);
          slots.push_back(x);
          self(self, syl + 1);
          exps.pop_back();
          slots.pop_back();
        }
    };
    visit(visit, 0);
    const std::string c = condition == 1 ? "I" : "II";
    const json params{{"condition", c}, {"max_syllables", 4}, {"max_exponent", 2}, {"words", words}};
    rec.add("geodesic-" + c, "Condition " + c + " words are geodesics", params, "0 violations", length.summary(),
            length.ok() && words > 0, length.witness);
    rec.add("classified-" + c, "check_condition recognizes Condition " + c, params, "0 violations",
            classified.summary(), classified.ok(), classified.witness);
  }
}

void suite_lemma72(const HnnInstance& in, const Caps& caps, Recorder& rec) {
  const auto& p = in.presentation;
  const auto w0 = family_word(in, 0);
  rec.equal("length", "|w_0| = 22", json::object(), 22, static_cast<long long>(w0.size()));
  const auto pat0 = p.t_pattern(w0).to_string();
  rec.add("W0", "t-pattern of w_0", json::object(), "+-+-++--+++---", pat0, pat0 == "+-+-++--+++---");
  for (int i = 0; i <= caps.max_index; ++i) {
    const auto w = family_word(in, i);
    const long long blk = family_block(i);
    rec.equal("length", "|w_i| = 14 * 10^i + 8", {{"i", i}}, 14 * blk + 8,
              static_cast<long long>(w.size()));
    rec.equal("max-run", "W_i has runs of at most 3 * 10^i equal signs", {{"i", i}}, 3 * blk,
              consecutive_run_bound(p.t_pattern(w)));
    for (int n = 1; n <= caps.max_n; ++n) {
      const auto wn = power(p, w, n);
      const bool cond = p.check_condition(wn) == GeodesicCondition::kI;
      rec.add("condition-I", "w_i^n satisfies Condition I", {{"i", i}, {"n", n}}, "I", cond ? "I" : "not I", cond,
              "w_" + std::to_string(i) + "^" + std::to_string(n));
      if (i <= caps.value_max_i)
        rec.equal("geodesic-power", "|w_i^n| = n |w_i|", {{"i", i}, {"n", n}}, static_cast<long long>(wn.size()),
                  p.length(p.element(wn)));
    }
    const bool cert = commutator_certificate_check(p, in.family, i);
    rec.add("commutators", "w_i is a product of commutators", {{"i", i}}, "true", cert ? "true" : "false", cert,
            "w_" + std::to_string(i));
    for (int j = i + 1; j <= caps.max_index; ++j) {
      const auto sep = family_separation_check(p, in.family, i, j, caps.max_n);
      std::ostringstream runs;
      for (int r : sep.run_i_powers) runs << r << ' ';
      rec.add("separation", "run(W_j) = 3 * 10^j exceeds every run of W_i^n", {{"i", i}, {"j", j}},
              "separated", "run_j " + std::to_string(sep.run_j) + ", runs of W_i^n: " + runs.str(), sep.separated);
    }
  }
}

void suite_abelian_common(const AbelianQuotient& ab, const Instance& inst, Recorder& rec) {
  const std::string got = ab.invariants().to_string();
  if (inst.source.contains("expect") && inst.source["expect"].contains("abelianization")) {
    const std::string want = inst.source["expect"]["abelianization"].get<std::string>();
    rec.add("invariants", "abelianization invariant factors", json::object(), want, got, want == got);
  } else {
    rec.add("invariants", "abelianization invariant factors", json::object(), "(no expectation)", got, true);
  }
}

using SuiteFn = std::function<void(const Instance&, Recorder&)>;

struct SuiteDef {
  std::string name;
  bool amalgam, hnn;
  SuiteFn run;
};

template <class F>
SuiteFn both(F f) {
  return [f](const Instance& inst, Recorder& rec) {
    std::visit([&](const auto& in) { f(in, inst.caps, rec); }, inst.model);
  };
}

template <class I, class F>
SuiteFn only(F f) {
  return [f](const Instance& inst, Recorder& rec) { f(std::get<I>(inst.model), inst.caps, rec); };
}

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = {
      {"lemma31", true, false, only<AmalgamInstance>(suite_lemma31)},
      {"lemma61", false, true, only<HnnInstance>(suite_lemma61)},
      {"lemma62", false, true, only<HnnInstance>(suite_lemma62)},
      {"lemma63", false, true, only<HnnInstance>(suite_lemma63)},
      {"lipschitz", true, true, both([](const auto& in, const Caps& c, Recorder& r) { suite_lipschitz(in, c, r); })},
      {"symmetry", true, true, both([](const auto& in, const Caps& c, Recorder& r) { suite_symmetry(in, c, r); })},
      {"split", true, true, both([](const auto& in, const Caps& c, Recorder& r) { suite_split(in, c, r); })},
      {"prop1", true, false, only<AmalgamInstance>([](const auto& in, const Caps& c, Recorder& r) {
         suite_defect(in, c, r);
       })},
      {"prop3", false, true, only<HnnInstance>([](const auto& in, const Caps& c, Recorder& r) {
         suite_defect(in, c, r);
       })},
      {"lemma41", true, false, only<AmalgamInstance>(suite_lemma41)},
      {"lemma42", true, false, only<AmalgamInstance>(suite_lemma42)},
      {"lemma43", true, false, only<AmalgamInstance>([](const auto& in, const Caps& c, Recorder& r) {
         family_values(in, c, r, true);
       })},
      {"prop2", true, false, only<AmalgamInstance>([](const auto& in, const Caps& c, Recorder& r) {
         family_values(in, c, r, false);
         family_abelian(in, c, r, "commutator");
       })},
      {"lemma71", false, true, only<HnnInstance>(suite_lemma71)},
      {"lemma72", false, true, only<HnnInstance>(suite_lemma72)},
      {"prop4", false, true, only<HnnInstance>([](const auto& in, const Caps& c, Recorder& r) {
         family_values(in, c, r, false);
         family_abelian(in, c, r, "commutator");
       })},
      {"oracle", true, true, both([](const auto& in, const Caps& c, Recorder& r) { suite_oracle(in, c, r); })},
      {"abelian", true, true, [](const Instance& inst, Recorder& rec) {
         std::visit(
             [&](const auto& in) {
               const auto& m = model(in);
               suite_abelian_common(m.abelianization(), inst, rec);
               family_abelian(in, inst.caps, rec, "family");
               using W = std::decay_t<decltype(family_word(in, 0))>;
               W gen;
               if constexpr (std::is_same_v<W, AWord>)
                 gen = {{Side::A, in.family.params.a1}};
               else
                 gen = {HLetter::t()};
               const bool nonzero = !m.in_commutator_subgroup(gen);
               rec.add("generator", "a single generator has nonzero image", {{"word", m.format(gen)}}, "nonzero",
                       nonzero ? "nonzero" : "zero", nonzero, m.format(gen));
             },
             inst.model);
       }}};
  return defs;
}

const SuiteDef* find_suite(std::string_view name) {
  for (const auto& d : registry())
    if (d.name == name) return &d;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.push_back(d.name);
    return out;
  }();
  return names;
}

bool suite_applies(std::string_view name, const Instance& inst) {
  const auto* d = find_suite(name);
  return d && (inst.is_amalgam() ? d->amalgam : d->hnn);
}

std::vector<std::string> applicable_suites(const Instance& inst) {
  std::vector<std::string> out;
  for (const auto& name : suite_names())
    if (suite_applies(name, inst)) out.push_back(name);
  return out;
}

SuiteReport run_suites(const Instance& inst, const std::vector<std::string>& names) {
  for (const auto& name : names) {
    if (!find_suite(name)) throw ValidationError("unknown suite '" + name + "'");
    if (!suite_applies(name, inst))
      throw ValidationError("suite '" + name + "' does not apply to " +
                            (inst.is_amalgam() ? "amalgam" : "HNN") + " instances");
  }
  SuiteReport report;
  report.instance = inst.name;
  report.seed = inst.caps.seed;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& name : names) {
    Recorder rec(report, name);
    try {
      find_suite(name)->run(inst, rec);
    } catch (const CapExceeded& e) {
      rec.add("cap", "suite completes within its caps", json::object(), "completed", e.what(), false, e.what());
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qm
