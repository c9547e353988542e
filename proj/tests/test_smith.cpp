#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qm/smith.hpp"

using namespace qm;

TEST_SUITE("smith") {
  TEST_CASE("worked examples") {
    CHECK(smith_invariants({{2, 0}, {0, 3}}, 2).nontrivial() == std::vector<long long>{6});
    CHECK(smith_invariants({{2, 0}, {0, 3}}, 2).to_string() == "Z6");
    CHECK(smith_invariants({}, 2).factors == std::vector<long long>{0, 0});
    CHECK(smith_invariants({{6, 0}, {0, 4}, {3, -2}}, 2).nontrivial() == std::vector<long long>{12});
    CHECK(smith_invariants({{2, 0, 0}, {0, 2, 0}, {1, -1, 0}}, 3).to_string() == "Z2 + Z");
    CHECK(smith_invariants({{1, 0}, {0, 1}}, 2).to_string() == "0");
  }

  TEST_CASE("agrees with determinantal divisors on random matrices") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> entry(-6, 6), dim(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
      const int rows = dim(rng), rank = dim(rng);
      IntMatrix rel(rows, std::vector<long long>(rank));
      for (auto& r : rel)
        for (auto& x : r) x = entry(rng);
      auto expected = oracle::determinantal_invariants(rel, rank);
      CHECK(smith_invariants(rel, rank).factors == expected);
    }
  }

  TEST_CASE("invariant under unimodular row operations") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> entry(-5, 5), pick(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
      IntMatrix rel(3, std::vector<long long>(3));
      for (auto& r : rel)
        for (auto& x : r) x = entry(rng);
      const auto before = smith_invariants(rel, 3);
      for (int op = 0; op < 5; ++op) {
        const int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        const int k = entry(rng);
        for (int c = 0; c < 3; ++c) rel[i][c] += k * rel[j][c];
        std::swap(rel[i], rel[j]);
      }
      CHECK(smith_invariants(rel, 3) == before);
    }
  }

  TEST_CASE("quotient membership") {
    const AbelianQuotient q({{6, 0}, {0, 4}, {3, -2}}, 2);
    CHECK(q.is_zero({6, 0}));
    CHECK(q.is_zero({3, -2}));
    CHECK(q.is_zero({0, 0}));
    CHECK_FALSE(q.is_zero({1, 0}));
    CHECK_FALSE(q.is_zero({0, 2}));
    CHECK(q.is_zero({1, 2 * 1 + 4}) == q.is_zero({1, 2}));
    // (1, 0) has order 6 and (1, 1) generates Z12.
    for (int k = 1; k < 6; ++k) CHECK_FALSE(q.is_zero({k, 0}));
    CHECK(q.is_zero({6, 0}));
    for (int k = 1; k < 12; ++k) CHECK_FALSE(q.is_zero({k, k}));
    CHECK(q.is_zero({12, 12}));
  }
}
