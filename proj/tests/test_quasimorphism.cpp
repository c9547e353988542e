#include <doctest.h>

#include <random>
#include <sstream>

#include "qm/cayley.hpp"
#include "qm/config.hpp"
#include "qm/defect.hpp"
#include "qm/error.hpp"

using namespace qm;

namespace {

const AmalgamInstance& psl() {
  static const auto inst = builtin_instance("psl2z");
  return std::get<AmalgamInstance>(inst.model);
}

const AmalgamInstance& sl() {
  static const auto inst = builtin_instance("sl2z");
  return std::get<AmalgamInstance>(inst.model);
}

const HnnInstance& klein() {
  static const auto inst = builtin_instance("klein-hnn");
  return std::get<HnnInstance>(inst.model);
}

// Reduced words of length 2..4 whose squares are reduced.
template <class M>
std::vector<typename M::Word> short_patterns(const M& m) {
  std::vector<typename M::Word> out, frontier{{}};
  for (int len = 1; len <= 4; ++len) {
    std::vector<typename M::Word> next;
    for (const auto& u : frontier)
      for (int c = 0; c < m.alphabet_size(); ++c) {
        auto v = u;
        v.push_back(m.letter(c));
        if (m.is_reduced(v)) next.push_back(v);
      }
    for (const auto& v : next) {
      auto sq = v;
      sq.insert(sq.end(), v.begin(), v.end());
      if (len >= 2 && m.is_reduced(sq)) out.push_back(v);
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_SUITE("quasimorphism") {
  TEST_CASE("non-overlapping occurrence counts") {
    const std::string abab = "abab", ab = "ab", aaa = "aaa", aa = "aa";
    CHECK(count_nonoverlap(std::vector<char>(abab.begin(), abab.end()), std::vector<char>(ab.begin(), ab.end())) == 2);
    CHECK(count_nonoverlap(std::vector<char>(aaa.begin(), aaa.end()), std::vector<char>(aa.begin(), aa.end())) == 1);
    const auto& m = psl().presentation;
    const auto w0 = encode(m, build_wi_amalgam(psl().family, 0));
    auto w0sq = w0;
    w0sq.insert(w0sq.end(), w0.begin(), w0.end());
    CHECK(count_nonoverlap(w0sq, w0) == 2);
  }

  TEST_CASE("greedy count is maximal against brute force") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<int> text(rng() % 12), pat(1 + rng() % 3);
      for (auto& x : text) x = static_cast<int>(rng() % 2);
      for (auto& x : pat) x = static_cast<int>(rng() % 2);
      // best[i] = max occurrences within text[i..].
      std::vector<int> best(text.size() + 1, 0);
      for (int i = static_cast<int>(text.size()) - 1; i >= 0; --i) {
        best[i] = best[i + 1];
        if (i + pat.size() <= text.size() && std::equal(pat.begin(), pat.end(), text.begin() + i))
          best[i] = std::max(best[i], 1 + best[i + pat.size()]);
      }
      CHECK(count_nonoverlap(text, pat) == best[0]);
    }
  }

  TEST_CASE("family word values") {
    const auto& m = sl().presentation;
    const Pattern w0(m, build_wi_amalgam(sl().family, 0));
    const Pattern w1(m, build_wi_amalgam(sl().family, 1));
    for (int n = 1; n <= 3; ++n) {
      const auto g = m.element(power(m, w0.word(), n));
      CHECK(c_w(m, g, w0) == n);
      CHECK(c_w_inverse(m, g, w0) == 0);
      CHECK(h_w(m, g, w0) == n);
      CHECK(h_w(m, g, w1) == 0);
    }
    CHECK(c_w(m, m.identity(), w0) == 0);
    CHECK(h_w(m, m.identity(), w0) == 0);
  }

  TEST_CASE("patterns with non-reduced squares are rejected") {
    const auto& m = psl().presentation;
    const Pattern p(m, m.parse("A:1 A:1"));
    CHECK_FALSE(p.square_reduced());
    CHECK_THROWS_AS(c_w(m, m.element(m.parse("A:1 B:1")), p), PreconditionError);
    CHECK_THROWS_AS(Pattern(m, m.parse("A:1")), PreconditionError);
  }

  TEST_CASE("dynamic programme agrees with the exhaustive oracle") {
    const auto& m = psl().presentation;
    const ExhaustiveOracle<AmalgamPresentation> oracle(m, 5);
    const auto ball = cayley_ball(m, 4);
    for (const auto& w : short_patterns(m)) {
      const Pattern pat(m, w);
      for (const auto& [g, d] : ball) {
        if (realizer_length_bound(d, pat.length()) > 5) continue;
        CHECK(c_w(m, g, pat) == oracle.c_w(m, g, w));
      }
    }
    const auto& k = klein().presentation;
    const ExhaustiveOracle<HnnPresentation> koracle(k, 4);
    for (const auto& w : short_patterns(k)) {
      if (w.size() > 3) continue;
      const Pattern pat(k, w);
      for (const auto& [g, d] : cayley_ball(k, 2))
        if (realizer_length_bound(d, pat.length()) <= 4) CHECK(c_w(k, g, pat) == koracle.c_w(k, g, w));
    }
  }

  TEST_CASE("inversion symmetry, range and Lipschitz bounds") {
    const auto& m = sl().presentation;
    const Pattern pat(m, m.parse("A:1 B:1 A:2 B:1"));
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto g = m.element(random_word(m, rng, 30));
      const auto h = m.element(random_word(m, rng, 30));
      CHECK(c_w(m, g, pat) == c_w(m, m.inverse(g), pat.inverted(m)));
      CHECK(h_w(m, g, pat) == -h_w(m, m.inverse(g), pat));
      CHECK(c_w(m, g, pat) >= 0);
      CHECK(c_w(m, g, pat) <= m.length(g) / pat.length());
      const int d = m.length(m.multiply(m.inverse(g), h));
      CHECK(std::abs(c_w(m, g, pat) - c_w(m, h, pat)) <= 2 * d);
      CHECK(std::abs(h_w(m, g, pat) - h_w(m, h, pat)) <= 4 * d);
      CHECK(std::abs(delta_h(m, pat, g, h)) <= kDefectBound);
      CHECK(delta_h(m, pat, m.identity(), g) == 0);
    }
  }

  TEST_CASE("serial and parallel kernels agree") {
    const auto& m = sl().presentation;
    const Pattern pat(m, build_wi_amalgam(sl().family, 0));
    const DefectStrategy random = RandomStrategy{2000, 50, 42};
    CHECK(defect_scan(m, pat, random, Execution::kSerial) == defect_scan(m, pat, random, Execution::kParallel));
    const DefectStrategy ball = ExhaustiveStrategy{2};
    CHECK(defect_scan(m, pat, ball, Execution::kSerial) == defect_scan(m, pat, ball, Execution::kParallel));

    std::vector<AElement> elements;
    for (const auto& [g, d] : cayley_ball(m, 3)) elements.push_back(g);
    const auto a = qm_values(m, elements, pat, Execution::kSerial);
    const auto b = qm_values(m, elements, pat, Execution::kParallel);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].h() == b[i].h());
  }

  TEST_CASE("defect reports are reproducible and well formed") {
    const auto& m = psl().presentation;
    const Pattern pat(m, build_wi_amalgam(psl().family, 0));
    const auto rep = defect_scan(m, pat, ExhaustiveStrategy{3});
    CHECK(rep.passed());
    CHECK(rep.samples == static_cast<long long>(rep.rows.size()));
    std::ostringstream a, b;
    rep.write_csv(a);
    defect_scan(m, pat, ExhaustiveStrategy{3}).write_csv(b);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("x_len,y_len,delta_abs\n", 0) == 0);
    CHECK(a.str().find("observed_max,bound,samples,seed") != std::string::npos);
  }
}
