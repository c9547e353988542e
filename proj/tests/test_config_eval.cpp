#include <doctest.h>

#include "qm/config.hpp"
#include "qm/error.hpp"
#include "qm/eval.hpp"

using namespace qm;

TEST_SUITE("config") {
  TEST_CASE("group specs") {
    CHECK(parse_group_spec("cyclic:5").order() == 5);
    CHECK(parse_group_spec("product:[cyclic:2,cyclic:3]").order() == 6);
    CHECK(parse_group_spec("table:[[0,1],[1,0]]").order() == 2);
    CHECK_THROWS_AS(parse_group_spec("cyclic:"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("dihedral:4"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("table:[[0,1],[1,1]]"), ValidationError);
  }

  TEST_CASE("maps and homomorphism extension") {
    CHECK(parse_map_spec("map:{1->3}") == std::vector<std::pair<Elem, Elem>>{{1, 3}});
    CHECK(parse_map_spec("map:{1→3, 2->4}").size() == 2);
    CHECK_THROWS_AS(parse_map_spec("map:{1-3}"), ParseError);
    const auto z2 = FiniteGroup::cyclic(2), z6 = FiniteGroup::cyclic(6);
    CHECK(extend_homomorphism(z2, z6, {{1, 3}}) == std::vector<Elem>{0, 3});
    CHECK_THROWS_AS(extend_homomorphism(z2, z6, {{1, 2}}), ValidationError);
  }

  TEST_CASE("built-in instances load") {
    for (const auto& name : builtin_names()) {
      const auto inst = builtin_instance(name);
      CHECK(inst.name == name);
      CHECK(load_instance(builtin_config(name)).name == name);
    }
    CHECK(builtin_instance("psl2z").is_amalgam());
    CHECK_FALSE(builtin_instance("klein-hnn").is_amalgam());
    CHECK_THROWS(builtin_instance("nope"));
  }

  TEST_CASE("caps round trip") {
    Caps c;
    c.radius = 2;
    c.seed = 7;
    const auto back = parse_caps(caps_to_json(c));
    CHECK(back.radius == 2);
    CHECK(back.seed == 7);
    CHECK(builtin_instance("klein-hnn").caps.oracle_radius == 3);
  }

  TEST_CASE("bad documents are rejected") {
    auto doc = builtin_config("psl2z");
    doc["kind"] = "other";
    CHECK_THROWS(load_instance(doc));
    doc = builtin_config("klein-hnn");
    doc["phi"] = "map:{1->0}";  // not injective
    CHECK_THROWS(load_instance(doc));
  }
}

TEST_SUITE("eval") {
  TEST_CASE("expressions") {
    const auto sl = builtin_instance("sl2z");
    const auto psl = builtin_instance("psl2z");
    const auto k = builtin_instance("klein-hnn");
    CHECK(evaluate(sl, "hw w0 w0^2") == "2");
    CHECK(evaluate(sl, "hw w1, w0^2") == "0");
    CHECK(evaluate(sl, "cw w0, w0^3") == "3");
    CHECK(evaluate(k, "reduce t a:1 T") == "a:2");
    CHECK(evaluate(psl, "len A:1 B:1 A:1") == "3");
    CHECK(evaluate(sl, "reduce A:1 A:2 B:1") == "B:3");
    CHECK(evaluate(psl, "reduce A:1 A:2") == "e");
    CHECK(evaluate(sl, "eq A:1 B:1, A:4 B:3") == "true");
    CHECK(evaluate(sl, "len w0") == "40");
    CHECK(evaluate(k, "len w0") == "22");
    CHECK(evaluate(sl, "abelian") == "Z12");
    CHECK(evaluate(psl, "abelian") == "Z6");
    CHECK(evaluate(k, "abelian") == "Z2 + Z");
    CHECK(evaluate(sl, "abelian w0") == "0");
    CHECK(evaluate(psl, "pattern w0") == "1!2@1111!!!!2222@@@@");
    CHECK(evaluate(k, "pattern w0") == "+-+-++--+++---");
    CHECK(evaluate(psl, "cover w0^2, w0^-1") == "cannot cover (21/21 offsets refuted)");
    CHECK(evaluate(psl, "cover 1!2@, 1!").rfind("may cover", 0) == 0);
  }

  TEST_CASE("errors carry positions") {
    const auto sl = builtin_instance("sl2z");
    auto position = [&](const char* expr) {
      try {
        evaluate(sl, expr);
      } catch (const ParseError& e) {
        return static_cast<long long>(e.position());
      }
      return -1LL;
    };
    CHECK(position("len A:1 Q:2") == 8);
    CHECK(position("frob A:1") == 0);
    CHECK(position("eq A:1") >= 0);
    CHECK(position("") == 0);
    CHECK(position("hw w0 w9") >= 0);
    CHECK_THROWS_AS(evaluate(sl, "hw A:1 A:1, A:1"), PreconditionError);
  }
}
