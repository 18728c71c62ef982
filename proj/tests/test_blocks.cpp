#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "decat/blocks.hpp"
#include "decat/verify.hpp"

using namespace decat;

TEST_CASE("blocks of small degrees") {
  const auto b23 = blocks(2, Modulus(3));
  REQUIRE(b23.size() == 2);
  CHECK(b23[0].core == Partition({2}));
  CHECK(b23[0].members == std::vector<Partition>{{2}});
  CHECK(b23[1].core == Partition({1, 1}));
  CHECK(b23[1].members == std::vector<Partition>{{1, 1}});

  const auto b33 = blocks(3, Modulus(3));
  REQUIRE(b33.size() == 1);
  CHECK(b33[0].core == Partition{});
  CHECK(b33[0].members == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(b33[0].p_weight == 1);
  CHECK(b33[0].weight.alpha_mult() == std::map<long, long>{{0, 1}, {1, 1}, {2, 1}});

  const auto b22 = blocks(2, Modulus(2));
  REQUIRE(b22.size() == 1);
  CHECK(b22[0].core == Partition{});
  CHECK(b22[0].members.size() == 2);

  CHECK(blocks(0, Modulus(5)).size() == 1);
  CHECK(blocks(4, Modulus(0)).size() == 5);
}

TEST_CASE("same_block") {
  CHECK(same_block({2}, {1, 1}, Modulus(2)));
  CHECK_FALSE(same_block({2}, {1, 1}, Modulus(3)));
  CHECK(same_block({3, 1}, {3, 1}, Modulus(5)));
  CHECK_THROWS_AS(same_block({2}, {1}, Modulus(2)), std::invalid_argument);
  for (const Partition& a : partitions_of(6))
    for (const Partition& b : partitions_of(6))
      CHECK(same_block(a, b, Modulus(3)) == (weight(a, Modulus(3)) == weight(b, Modulus(3))));
}

TEST_CASE("derived equivalence classes") {
  const auto c33 = derived_equivalence_classes(3, Modulus(3));
  REQUIRE(c33.size() == 1);
  REQUIRE(c33[0].size() == 1);
  CHECK(c33[0][0].p_weight == 1);

  const auto c23 = derived_equivalence_classes(2, Modulus(3));
  REQUIRE(c23.size() == 1);
  CHECK(c23[0].size() == 2);
  CHECK(c23[0][0].p_weight == 0);

  for (int e : {0, 2, 3}) {
    const auto c0 = derived_equivalence_classes(0, Modulus(e));
    REQUIRE(c0.size() == 1);
    REQUIRE(c0[0].size() == 1);
    CHECK(c0[0][0].members == std::vector<Partition>{{}});
  }

  // across degrees: the weight-1 blocks of degree 3 and 4 for e = 3 group together
  const auto across = derived_equivalence_classes_up_to(4, Modulus(3));
  REQUIRE(across.size() == 2);
  for (const auto& b : across[1]) CHECK(b.p_weight == 1);
  // core [] in degree 3 and core [1] in degree 4
  REQUIRE(across[1].size() == 2);
  CHECK(across[1][0].core == Partition{});
  CHECK(across[1][1].core == Partition{1});
}

TEST_CASE("block theorem and core well-definedness") {
  for (int e : {0, 2, 3, 5}) {
    const auto bt = check_block_theorem(Modulus(e), 9);
    CHECK_MESSAGE(bt.passed, bt.counterexample);
  }
  for (int e : {2, 3}) {
    const auto wd = check_core_well_defined(Modulus(e), 7);
    CHECK_MESSAGE(wd.passed, wd.counterexample);
  }
}
