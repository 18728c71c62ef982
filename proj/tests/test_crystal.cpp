#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "decat/crystal.hpp"
#include "decat/fock.hpp"
#include "decat/verify.hpp"

using namespace decat;

namespace {

Residue r(long i, int e) { return Residue(i, Modulus(e)); }

Signature sig(const std::string& word) {
  Signature s;
  int k = static_cast<int>(word.size());
  for (char c : word) {
    s.symbols.push_back({c, Box{k, static_cast<int>(word.size()) - k + 1}});
    --k;
  }
  return s;
}

}  // namespace

TEST_CASE("signatures") {
  const Signature s1 = signature({1}, r(1, 2));
  CHECK(s1.word() == "++");
  CHECK(s1.symbols[0].box == Box{2, 1});
  CHECK(s1.symbols[1].box == Box{1, 2});
  CHECK(signature({2}, r(1, 2)).word() == "+-");
  CHECK(signature({}, r(0, 3)).word() == "+");
  CHECK(signature({}, r(0, 0)).word() == "+");
  CHECK(signature({1, 1}, r(1, 2)).word() == "-+");
}

TEST_CASE("reduced signatures") {
  CHECK(reduced_signature(sig("+-")).word().empty());
  CHECK(reduced_signature(sig("-+")).word() == "-+");
  CHECK(reduced_signature(sig("++-")).word() == "+");
  CHECK(reduced_signature(sig("-++--+-+")).word() == "-+");
  CHECK(reduced_signature(sig("++-")).symbols.front().box == sig("++-").symbols.front().box);
  CHECK_THROWS_AS(reduced_signature(sig("+x")), std::invalid_argument);

  const auto conf = check_signature_confluence(10);
  CHECK_MESSAGE(conf.passed, conf.counterexample);
}

TEST_CASE("crystal operators") {
  CHECK_FALSE(e_tilde({}, r(0, 3)).has_value());
  CHECK(e_tilde({1, 1}, r(1, 2)) == Partition{1});
  CHECK_FALSE(e_tilde({2}, r(1, 2)).has_value());

  CHECK(f_tilde({}, r(0, 3)) == Partition{1});
  CHECK(f_tilde({1}, r(1, 2)) == Partition({1, 1}));
  CHECK_FALSE(f_tilde({2}, r(1, 2)).has_value());
  // f_1 v_(2) is nonzero even though f~_1 (2) is null
  CHECK_FALSE(apply_f(FockVector::basis({2}), r(1, 2)).is_zero());

  CHECK(good_box({1, 1}, r(1, 2)) == Box{2, 1});
  CHECK(cogood_box({1}, r(1, 2)) == Box{2, 1});
}

TEST_CASE("string lengths") {
  CHECK(epsilon({}, r(0, 3)) == 0);
  CHECK(phi({}, r(0, 3)) == 1);
  CHECK(epsilon({1, 1}, r(1, 2)) == 1);
  CHECK(phi({1, 1}, r(1, 2)) == 1);
  CHECK(epsilon({1}, r(1, 2)) == 0);
  CHECK(phi({1}, r(1, 2)) == 2);
}

TEST_CASE("crystal graphs") {
  const CrystalGraph g1 = crystal_graph(Modulus(2), 1);
  CHECK(g1.nodes == std::vector<Partition>{{}, {1}});
  REQUIRE(g1.edges.size() == 1);
  CHECK(g1.edges[0] == CrystalEdge{{}, {1}, 0});

  const CrystalGraph g2 = crystal_graph(Modulus(3), 2);
  CHECK(g2.edges == std::vector<CrystalEdge>{{{}, {1}, 0}, {{1}, {2}, 1}, {{1}, {1, 1}, 2}});

  CHECK(crystal_graph(Modulus(2), 4).nodes.size() == 12);

  for (int e : {0, 2, 3}) {
    const CrystalGraph g = crystal_graph(Modulus(e), 6);
    std::set<std::pair<Partition, long>> seen;
    for (const auto& edge : g.edges) {
      CHECK(edge.target.size() == edge.source.size() + 1);
      CHECK(seen.insert({edge.source, edge.residue}).second);
    }
  }
}

TEST_CASE("crystal axioms") {
  for (int e : {0, 2, 3, 5}) {
    const auto res = check_crystal(Modulus(e), 7);
    CHECK_MESSAGE(res.passed, res.counterexample);
  }
}
