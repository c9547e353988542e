#include <doctest.h>

#include <sstream>

#include "qm/config.hpp"
#include "qm/error.hpp"

using namespace qm;

namespace {

const AmalgamInstance& sl() {
  static const auto inst = builtin_instance("sl2z");
  return std::get<AmalgamInstance>(inst.model);
}

const HnnInstance& klein() {
  static const auto inst = builtin_instance("klein-hnn");
  return std::get<HnnInstance>(inst.model);
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("amalgam family lengths and patterns") {
    for (int i = 0; i <= 2; ++i) {
      const auto w = build_wi_amalgam(sl().family, i);
      CHECK(static_cast<long long>(w.size()) == 40 * family_block(i));
      CHECK(sl().presentation.is_reduced(w));
    }
    const auto w0 = family_pattern(sl().family, 0);
    CHECK(w0.to_string() == "1!2@1111!!!!2222@@@@");
    CHECK(w0.inverse().to_string() == "2222@@@@1111!!!!2@1!");
    CHECK(symbol_pattern(sl().family, build_wi_amalgam(sl().family, 0)) == w0);
    CHECK(family_plus_block(sl().family, 0).size() == 8);
    CHECK(family_minus_block(sl().family, 0).size() == 8);
    CHECK_THROWS_AS(build_wi_amalgam(sl().family, 3), CapExceeded);
  }

  TEST_CASE("amalgam parameters are validated") {
    nlohmann::json doc = builtin_config("sl2z");
    // Z4 *_{Z2} Z6 with A = Z4: only two double cosets C\A/C.
    doc["A"] = "cyclic:4";
    doc["B"] = "cyclic:6";
    doc["iotaA"] = "map:{1->2}";
    doc["iotaB"] = "map:{1->3}";
    CHECK_THROWS_AS(load_instance(doc), ValidationError);

    const auto& p = sl().presentation;
    CHECK_THROWS_AS(validate_amalgam_params(p, {3, 2, 1}), ValidationError);  // a1 in C
    CHECK_THROWS_AS(validate_amalgam_params(p, {1, 4, 1}), ValidationError);  // a2 in C a1 C
    CHECK_THROWS_AS(validate_amalgam_params(p, {1, 2, 2}), ValidationError);  // b in C
    const auto f = validate_amalgam_params(p, {1, 2, 1});
    CHECK(f.double_cosets == 3);
  }

  TEST_CASE("family words lie in the commutator subgroup") {
    for (int i = 0; i <= 2; ++i) {
      CHECK(commutator_certificate_check(sl().presentation, sl().family, i));
      CHECK(commutator_certificate_check(klein().presentation, klein().family, i));
    }
  }

  TEST_CASE("covering refutation") {
    const auto w0 = family_pattern(sl().family, 0);
    const auto rep = cover_refute(w0.power(2), w0.inverse());
    CHECK(rep.verdicts.size() == 21);
    CHECK(rep.cannot_cover());
    CHECK(rep.refuted_count() == 21);
    CHECK(illegal_pair(Symbol::kOne, Symbol::kTwo));
    CHECK(illegal_pair(Symbol::kTwoBar, Symbol::kOneBar));
    CHECK_FALSE(illegal_pair(Symbol::kOne, Symbol::kOneBar));
    CHECK_FALSE(cover_refute(w0.power(2), w0).cannot_cover());
    CHECK(cover_refute(w0.power(2), w0.inverse(), Execution::kSerial).refuted_count() == 21);
    std::ostringstream os;
    rep.write_csv(os);
    CHECK(os.str().rfind("offset,refuting_index,text_sym,probe_sym\n", 0) == 0);
  }

  TEST_CASE("HNN family lengths, runs and separation") {
    for (int i = 0; i <= 2; ++i) {
      const auto w = build_wi_hnn(klein().family, i);
      CHECK(static_cast<long long>(w.size()) == 14 * family_block(i) + 8);
      CHECK(consecutive_run_bound(klein().presentation.t_pattern(w)) == 3 * family_block(i));
    }
    const auto w0 = klein().presentation.t_pattern(build_wi_hnn(klein().family, 0));
    CHECK(consecutive_run_bound(w0.power(3)) == 3);
    const auto sep = family_separation_check(klein().presentation, klein().family, 0, 1);
    CHECK(sep.separated);
    CHECK(sep.run_j == 30);
  }

  TEST_CASE("HNN parameters are validated") {
    const auto& p = klein().presentation;
    CHECK_THROWS_AS(validate_hnn_params(p, {1, 1}), ValidationError);  // g in C
    CHECK_THROWS_AS(validate_hnn_params(p, {2, 2}), ValidationError);  // h in phi(C)
    CHECK_NOTHROW(validate_hnn_params(p, {2, 1}));
  }
}
