#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qm/cayley.hpp"
#include "qm/config.hpp"
#include "qm/defect.hpp"
#include "qm/error.hpp"

using namespace qm;

namespace {

const AmalgamPresentation& psl() {
  static const auto inst = builtin_instance("psl2z");
  return std::get<AmalgamInstance>(inst.model).presentation;
}

const AmalgamPresentation& sl() {
  static const auto inst = builtin_instance("sl2z");
  return std::get<AmalgamInstance>(inst.model).presentation;
}

const AmalgamFamily& sl_family() {
  static const auto inst = builtin_instance("sl2z");
  static const auto f = std::get<AmalgamInstance>(inst.model).family;
  return f;
}

AWord w(const AmalgamPresentation& p, const char* text) { return p.parse(text); }

}  // namespace

TEST_SUITE("amalgam") {
  TEST_CASE("reduce") {
    CHECK(psl().reduce(w(psl(), "A:1 A:2")).empty());
    CHECK(psl().reduce(w(psl(), "A:1 B:1 A:2")) == w(psl(), "A:1 B:1 A:2"));
    CHECK(sl().reduce(w(sl(), "A:1 A:2 B:1")) == w(sl(), "B:3"));
  }

  TEST_CASE("is_reduced") {
    CHECK(psl().is_reduced(w(psl(), "A:1 B:1 A:1")));
    CHECK_FALSE(psl().is_reduced(w(psl(), "A:1 A:1")));
    CHECK_FALSE(sl().is_reduced(w(sl(), "A:3 B:1")));
  }

  TEST_CASE("equality") {
    CHECK(psl().equals(w(psl(), "A:1 B:1"), w(psl(), "A:1 B:1")));
    CHECK(sl().equals(w(sl(), "A:1 B:1"), w(sl(), "A:4 B:3")));
    CHECK_FALSE(psl().equals(w(psl(), "A:1"), w(psl(), "A:2")));
  }

  TEST_CASE("geodesic length") {
    CHECK(psl().length(psl().identity()) == 0);
    CHECK(psl().length(psl().element(w(psl(), "A:1 B:1 A:1"))) == 3);
    CHECK(sl().length(sl().element(build_wi_amalgam(sl_family(), 0))) == 40);
  }

  TEST_CASE("gauge orbits") {
    CHECK(sl().gauge_orbit(sl().element(w(sl(), "A:1"))).size() == 1);
    CHECK(psl().gauge_orbit(psl().element(w(psl(), "A:1 B:1 A:1 B:1"))).size() == 1);
    const auto g = sl().element(w(sl(), "A:1 B:1 A:1"));
    CHECK(sl().gauge_orbit(g).size() == 4);
    const auto words = sl().enumerate_geodesics(g);
    CHECK(words.size() == 4);
    for (const auto& u : words) CHECK(sl().element(u) == g);
    CHECK_THROWS_AS(sl().enumerate_geodesics(sl().element(build_wi_amalgam(sl_family(), 0)), 1000), CapExceeded);
  }

  TEST_CASE("abelianization") {
    CHECK(psl().abelianization().invariants().to_string() == "Z6");
    CHECK(sl().abelianization().invariants().to_string() == "Z12");
    CHECK_FALSE(sl().in_commutator_subgroup(w(sl(), "A:1")));
    CHECK(sl().in_commutator_subgroup(w(sl(), "A:1 B:1 A:5 B:3")));
  }

  TEST_CASE("parse and format") {
    CHECK(sl().format(w(sl(), "A:1 B:3")) == "A:1 B:3");
    CHECK_THROWS_AS(sl().parse("A:9"), ParseError);
    CHECK_THROWS_AS(sl().parse("C:1"), ParseError);
  }

  TEST_CASE("normal forms agree with the matrix representation of SL(2,Z)") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
      const auto u = random_word(sl(), rng, 20);
      const auto g = sl().element(u);
      CHECK(oracle::sl2z_image(g.word()) == oracle::sl2z_image(u));
      CHECK(sl().is_reduced(g.word()));
      // The map is faithful: equality of elements is equality of matrices.
      const auto v = random_word(sl(), rng, 4);
      CHECK(sl().equals(u, v) == (oracle::sl2z_image(u) == oracle::sl2z_image(v)));
      // Multiplication and inversion in the model match matrix algebra.
      const auto h = sl().element(v);
      CHECK(oracle::sl2z_image(sl().multiply(g, h).word()) ==
            oracle::mul(oracle::sl2z_image(u), oracle::sl2z_image(v)));
      CHECK(sl().multiply(g, sl().inverse(g)) == sl().identity());
    }
  }

  TEST_CASE("PSL(2,Z) normal forms agree with matrices up to sign") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
      const auto u = random_word(psl(), rng, 20);
      const auto v = random_word(psl(), rng, 3);
      CHECK(oracle::equal_up_to_sign(oracle::psl2z_image(psl().element(u).word()), oracle::psl2z_image(u)));
      CHECK(psl().equals(u, v) == oracle::equal_up_to_sign(oracle::psl2z_image(u), oracle::psl2z_image(v)));
    }
  }

  TEST_CASE("reduced iff geodesic on short words") {
    const auto ball = cayley_ball(psl(), 5);
    std::unordered_map<AElement, int> dist(ball.begin(), ball.end());
    std::vector<AWord> words{{}};
    for (int len = 1; len <= 5; ++len) {
      std::vector<AWord> next;
      for (const auto& u : words)
        if (static_cast<int>(u.size()) == len - 1)
          for (int c = 0; c < psl().alphabet_size(); ++c) {
            auto v = u;
            v.push_back(psl().letter(c));
            next.push_back(v);
          }
      for (const auto& v : next) {
        const auto g = psl().element(v);
        CHECK(psl().is_reduced(v) == (dist.at(g) == len));
        CHECK(psl().length(g) == dist.at(g));
      }
      words.insert(words.end(), next.begin(), next.end());
    }
  }
}
