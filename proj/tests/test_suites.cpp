#include <doctest.h>

#include <sstream>

#include "qm/error.hpp"
#include "qm/suites.hpp"

using namespace qm;

TEST_SUITE("suites") {
  TEST_CASE("applicability") {
    const auto psl = builtin_instance("psl2z");
    const auto k = builtin_instance("klein-hnn");
    CHECK(suite_applies("lemma31", psl));
    CHECK_FALSE(suite_applies("lemma31", k));
    CHECK(suite_applies("lemma61", k));
    CHECK_THROWS_AS(run_suites(psl, {"lemma61"}), ValidationError);
    CHECK_THROWS_AS(run_suites(psl, {"nonsense"}), ValidationError);
  }

  TEST_CASE("every applicable suite passes on the built-in instances") {
    for (const auto& name : builtin_names()) {
      auto inst = builtin_instance(name);
      inst.caps.samples = 200;
      inst.caps.random_pairs = 1000;
      const auto rep = run_suites(inst, applicable_suites(inst));
      CHECK(rep.passed());
      for (const auto& r : rep.records) {
        INFO(name, " ", r.id, " ", r.actual, " ", r.witness);
        CHECK(r.pass);
        CHECK_FALSE(r.anchor.empty());
      }
    }
  }

  TEST_CASE("reports are deterministic") {
    auto inst = builtin_instance("psl2z");
    inst.caps.samples = 100;
    const auto a = run_suites(inst, {"lipschitz", "split", "prop1"});
    const auto b = run_suites(inst, {"lipschitz", "split", "prop1"});
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK_FALSE(a.to_json().contains("wall_seconds"));
    CHECK(a.to_json(true).contains("wall_seconds"));
    std::ostringstream os;
    a.write_csv(os);
    CHECK(os.str().rfind("check_id,anchor,instance,parameters,expected,actual,pass,witness\n", 0) == 0);
  }

  TEST_CASE("caps that are too large become failed records") {
    auto inst = builtin_instance("psl2z");
    inst.caps.max_index = 5;
    const auto rep = run_suites(inst, {"lemma41"});
    CHECK_FALSE(rep.passed());
  }
}
