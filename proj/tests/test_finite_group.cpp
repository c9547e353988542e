#include <doctest.h>

#include <algorithm>
#include <array>

#include "qm/error.hpp"
#include "qm/finite_group.hpp"

using namespace qm;

namespace {

// S3 as permutations of {0,1,2}, indexed lexicographically.
FiniteGroup s3(std::vector<std::array<int, 3>>& perms) {
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      std::array<int, 3> xy{};
      for (int k = 0; k < 3; ++k) xy[k] = perms[x][perms[y][k]];
      table[x][y] = static_cast<int>(std::find(perms.begin(), perms.end(), xy) - perms.begin());
    }
  return FiniteGroup::from_table(table);
}

void check_axioms(const FiniteGroup& g) {
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    CHECK(g.mul(0, x) == x);
    CHECK(g.mul(x, 0) == x);
    CHECK(g.mul(x, g.inv(x)) == 0);
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) CHECK(g.mul(g.mul(x, y), z) == g.mul(x, g.mul(y, z)));
  }
}

}  // namespace

TEST_SUITE("finite_group") {
  TEST_CASE("cyclic groups") {
    const auto z6 = FiniteGroup::cyclic(6);
    CHECK(z6.mul(4, 5) == 3);
    CHECK(z6.inv(2) == 4);
    CHECK(z6.element_order(2) == 3);
    CHECK(z6.pow(5, -1) == 1);
    CHECK(FiniteGroup::cyclic(1).order() == 1);
    CHECK_THROWS_AS(FiniteGroup::cyclic(0), ValidationError);
  }

  TEST_CASE("Klein four-group as a product") {
    const std::array factors{FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)};
    const auto k = FiniteGroup::direct_product(factors);
    CHECK(k.order() == 4);
    CHECK(k.is_abelian());
    for (int x = 0; x < 4; ++x) CHECK(k.inv(x) == x);
    CHECK(k.mul(1, 2) == 3);
  }

  TEST_CASE("group axioms hold for every constructor") {
    std::vector<std::array<int, 3>> perms;
    check_axioms(FiniteGroup::cyclic(7));
    check_axioms(FiniteGroup::direct_product(std::array{FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)}));
    const auto s = s3(perms);
    check_axioms(s);
    CHECK_FALSE(s.is_abelian());
  }

  TEST_CASE("explicit tables are validated") {
    CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), ValidationError);  // 1 has no inverse
    CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {0, 1}}), ValidationError);  // 0 is not the identity
    // Latin square with identity 0 that is not associative.
    const std::vector<std::vector<int>> loop{
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    CHECK_THROWS_AS(FiniteGroup::from_table(loop), ValidationError);
  }

  TEST_CASE("subgroup closure") {
    const auto z6 = FiniteGroup::cyclic(6);
    CHECK(subgroup_closure(z6, std::vector<Elem>{3}).elements() == std::vector<Elem>{0, 3});
    CHECK(subgroup_closure(z6, std::vector<Elem>{}).elements() == std::vector<Elem>{0});
    const auto k = FiniteGroup::direct_product(std::array{FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)});
    CHECK(subgroup_closure(k, std::vector<Elem>{1}).elements() == std::vector<Elem>{0, 1});
    CHECK_THROWS_AS(Subgroup(z6, {0, 1}), ValidationError);
  }

  TEST_CASE("double cosets") {
    const auto z6 = FiniteGroup::cyclic(6);
    const Subgroup h(z6, {0, 3});
    const auto p = double_cosets(z6, h, h);
    CHECK(p.count() == 3);
    CHECK(p.classes[1] == std::vector<Elem>{1, 4});

    const Subgroup trivial(z6, {0});
    CHECK(double_cosets(z6, trivial, trivial).count() == 6);

    std::vector<std::array<int, 3>> perms;
    const auto s = s3(perms);
    const std::array<int, 3> swap01{1, 0, 2};
    const Elem tau = static_cast<Elem>(std::find(perms.begin(), perms.end(), swap01) - perms.begin());
    const auto t = subgroup_closure(s, std::vector<Elem>{tau});
    const auto q = double_cosets(s, t, t);
    REQUIRE(q.count() == 2);
    std::vector<std::size_t> sizes{q.classes[0].size(), q.classes[1].size()};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{2, 4});
  }

  TEST_CASE("embeddings") {
    const auto z2 = FiniteGroup::cyclic(2);
    const auto e6 = check_embedding(z2, FiniteGroup::cyclic(6), {0, 3});
    CHECK(e6.image().elements() == std::vector<Elem>{0, 3});
    CHECK(e6.preimage(3) == 1);
    CHECK(e6.preimage(1) == -1);
    CHECK(check_embedding(z2, FiniteGroup::cyclic(4), {0, 2}).image().elements() == std::vector<Elem>{0, 2});
    CHECK_THROWS_AS(check_embedding(z2, FiniteGroup::cyclic(6), {0, 2}), ValidationError);
    CHECK_THROWS_AS(check_embedding(FiniteGroup::cyclic(4), FiniteGroup::cyclic(2), {0, 1, 0, 1}), ValidationError);
  }

  TEST_CASE("induced group re-indexes a subgroup") {
    const auto z6 = FiniteGroup::cyclic(6);
    const Subgroup h(z6, {0, 2, 4});
    const auto g = induced_group(z6, h);
    CHECK(g.order() == 3);
    CHECK(g.mul(1, 2) == 0);  // 2 + 4 = 0 in Z6
  }
}
