#include <doctest.h>

#include <random>

#include "qm/cayley.hpp"
#include "qm/config.hpp"
#include "qm/defect.hpp"
#include "qm/error.hpp"

using namespace qm;

namespace {

const HnnInstance& klein() {
  static const auto inst = builtin_instance("klein-hnn");
  return std::get<HnnInstance>(inst.model);
}

const HnnPresentation& k() { return klein().presentation; }
HWord w(const char* text) { return k().parse(text); }

// Image in (Z2 x Z2) x| Z with t acting by swapping the two bits, which
// sends u = 1 to v = 2 as the defining relation requires.
struct Image {
  int a = 0;
  long long n = 0;
  friend bool operator==(const Image&, const Image&) = default;
};

int swap_bits(int a) { return ((a & 1) << 1) | ((a >> 1) & 1); }

Image image(const HWord& word) {
  Image out;
  for (const auto& l : word) {
    if (l.is_t()) {
      out.n += l.sign();
    } else {
      const int x = (out.n % 2 != 0) ? swap_bits(l.value) : l.value;
      out.a ^= x;
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("hnn") {
  TEST_CASE("britton reduction") {
    CHECK(k().britton_reduce(w("t a:1 T")) == w("a:2"));
    CHECK(k().britton_reduce(w("T a:2 t")) == w("a:1"));
    CHECK(k().britton_reduce(w("t a:3 T")) == w("t a:3 T"));
    CHECK(k().britton_reduce(w("t T a:1 a:1")).empty());
  }

  TEST_CASE("equality") {
    CHECK(k().equals(w("t a:1 T"), w("a:2")));
    CHECK_FALSE(k().equals(w("t"), w("T")));
    CHECK(k().equals(w("a:2 t a:1"), w("t")));
  }

  TEST_CASE("t-patterns") {
    CHECK(k().t_pattern(build_wi_hnn(klein().family, 0)).to_string() == "+-+-++--+++---");
    CHECK(k().t_pattern(w("a:1 a:2")).empty());
    CHECK(k().t_pattern(w("t t T")).to_string() == "++-");
  }

  TEST_CASE("gauge orbits and lengths") {
    CHECK(k().gauge_orbit(k().element(w("a:3"))).size() == 1);
    const auto g = k().element(w("a:2 t a:1"));
    bool has_t = false;
    for (const auto& u : k().enumerate_orbit(g)) has_t |= (u == w("t"));
    CHECK(has_t);
    CHECK(k().length(g) == 1);
    CHECK(k().length(k().identity()) == 0);
    CHECK(k().length(k().element(build_wi_hnn(klein().family, 0))) == 22);
    CHECK(k().gauge_orbit(k().element(w("t a:3 t a:3"))).size() <= 4);
  }

  TEST_CASE("geodesic length matches breadth-first distance") {
    for (const auto& [g, d] : cayley_ball(k(), 4)) CHECK(k().length(g) == d);
  }

  TEST_CASE("geodesic conditions") {
    const auto w0 = build_wi_hnn(klein().family, 0);
    CHECK(k().check_condition(w0) == GeodesicCondition::kI);
    CHECK(k().check_condition(w("T a:1 t a:2")) == GeodesicCondition::kII);
    CHECK(k().check_condition(w("T a:1 t")) == GeodesicCondition::kNeither);
    // The inverse of w0 opens with an A-letter, outside the syllable form.
    CHECK_THROWS_AS(k().check_condition(k().inverse_word(w0)), PreconditionError);
    CHECK(k().check_condition(w("t a:1 T")) == GeodesicCondition::kNeither);
  }

  TEST_CASE("abelianization") {
    CHECK(k().abelianization().invariants().to_string() == "Z2 + Z");
    CHECK_FALSE(k().in_commutator_subgroup(w("t")));
    CHECK(k().in_commutator_subgroup(build_wi_hnn(klein().family, 0)));
  }

  TEST_CASE("model operations are compatible with a homomorphism to (Z2 x Z2) x| Z") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 3000; ++trial) {
      const auto u = random_word(k(), rng, 16);
      const auto v = random_word(k(), rng, 6);
      const auto g = k().element(u);
      CHECK(image(k().britton_reduce(u)) == image(u));
      CHECK(image(g.word()) == image(u));
      CHECK(k().is_reduced(g.word()));
      if (k().equals(u, v)) CHECK(image(u) == image(v));
      const auto h = k().element(v);
      const auto gh = image(k().multiply(g, h).word());
      const auto iu = image(u), iv = image(v);
      CHECK(gh == Image{iu.a ^ (iu.n % 2 != 0 ? swap_bits(iv.a) : iv.a), iu.n + iv.n});
      CHECK(k().multiply(g, k().inverse(g)) == k().identity());
    }
  }

  TEST_CASE("reduced words with a t-letter are nontrivial") {
    std::mt19937_64 rng(13);
    int tested = 0;
    while (tested < 500) {
      const auto u = k().britton_reduce(random_word(k(), rng, 12));
      if (k().t_pattern(u).empty()) continue;
      ++tested;
      CHECK_FALSE(k().element(u).is_identity());
    }
  }

  TEST_CASE("parse errors") {
    CHECK_THROWS_AS(k().parse("a:4"), ParseError);
    CHECK_THROWS_AS(k().parse("x"), ParseError);
  }
}
