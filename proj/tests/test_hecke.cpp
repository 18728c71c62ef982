#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "decat/hecke.hpp"
#include "decat/oracles.hpp"
#include "decat/verify.hpp"

using namespace decat;

namespace {

HeckeElement mono(std::vector<int> a, Permutation w, int c = 1) { return HeckeElement::monomial(a, w, c); }

}  // namespace

TEST_CASE("permutations") {
  CHECK(compose({2, 1, 3}, {1, 3, 2}) == Permutation{2, 3, 1});
  CHECK(compose({1, 3, 2}, {2, 1, 3}) == Permutation{3, 1, 2});
  CHECK(reduced_word({1, 2, 3}).empty());
  CHECK(reduced_word({3, 2, 1}).size() == 3);
  const auto words = all_reduced_words({3, 2, 1});
  CHECK(words == std::vector<std::vector<int>>{{1, 2, 1}, {2, 1, 2}});
  Permutation w = identity_permutation(4);
  do {
    Permutation rebuilt = identity_permutation(4);
    const auto word = reduced_word(w);
    CHECK(static_cast<int>(word.size()) == inversion_count(w));
    for (int i : word) rebuilt = compose(rebuilt, simple_transposition(i, 4));
    CHECK(rebuilt == w);
  } while (std::next_permutation(w.begin(), w.end()));
}

TEST_CASE("generators") {
  CHECK(from_generator(GeneratorKind::Y, 1, 2) == mono({1, 0}, {1, 2}));
  CHECK(from_generator(GeneratorKind::Tau, 1, 3) == mono({0, 0, 0}, {2, 1, 3}));
  CHECK_THROWS_AS(from_generator(GeneratorKind::Y, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(from_generator(GeneratorKind::Tau, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(from_generator(GeneratorKind::Y, 0, 2), std::invalid_argument);
}

TEST_CASE("straightening") {
  const auto t1 = HeckeElement::tau(1, 2);
  const auto y1 = HeckeElement::y(1, 2);
  const auto y2 = HeckeElement::y(2, 2);
  const auto one = HeckeElement::scalar(1, 2);
  CHECK(t1 * y2 == y1 * t1 + one);
  CHECK(t1 * y2 == mono({1, 0}, {2, 1}) + mono({0, 0}, {1, 2}));
  CHECK(t1 * y1 == y2 * t1 - one);
  CHECK(t1 * t1 == one);
  // tau_1 y_1^2 = y_2^2 tau_1 - y_1 - y_2
  CHECK(t1 * y1 * y1 == mono({0, 2}, {2, 1}) - mono({1, 0}, {1, 2}) - mono({0, 1}, {1, 2}));
  CHECK_THROWS_AS(t1 * HeckeElement::y(1, 3), std::invalid_argument);
}

TEST_CASE("straightening matches the divided difference formula") {
  for (int n = 2; n <= 4; ++n)
    for (int i = 1; i < n; ++i)
      for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q) {
          std::vector<int> a(static_cast<std::size_t>(n), 1);
          a[static_cast<std::size_t>(i - 1)] = p;
          a[static_cast<std::size_t>(i)] = q;
          CHECK(left_multiply_tau(i, mono(a, identity_permutation(n))) ==
                oracle::tau_times_monomial_closed_form(i, a));
        }
}

TEST_CASE("defining relations") {
  for (int n = 2; n <= 4; ++n) {
    const auto checks = verify_relations(n);
    CHECK(checks.size() == 6);
    for (const auto& rc : checks) {
      CAPTURE(rc.name);
      CHECK_MESSAGE(rc.passed, rc.detail);
    }
  }
  CHECK_THROWS_AS(verify_relations(1), std::invalid_argument);
}

TEST_CASE("associativity, reduced words and filtration") {
  const auto assoc = check_hecke_associativity(7, 40);
  CHECK_MESSAGE(assoc.passed, assoc.counterexample);
  CHECK(assoc.instances == 40);
  const auto words = check_reduced_word_independence();
  CHECK_MESSAGE(words.passed, words.counterexample);
  const auto filt = check_hecke_filtration(7, 40);
  CHECK_MESSAGE(filt.passed, filt.counterexample);
}

TEST_CASE("expression parser") {
  const auto x = parse_hecke_expression("t1*y2*t1", 2);
  CHECK(x == HeckeElement::y(1, 2) + HeckeElement::tau(1, 2));
  CHECK(parse_hecke_expression("t1*y2 - y1*t1", 2) == HeckeElement::scalar(1, 2));
  CHECK(parse_hecke_expression("2*(y1 + y2) - -3", 2) ==
        Integer(2) * (HeckeElement::y(1, 2) + HeckeElement::y(2, 2)) + HeckeElement::scalar(3, 2));
  CHECK(parse_hecke_expression("t1*t2*t1 - t2*t1*t2", 3).is_zero());
  CHECK(parse_hecke_expression("123456789012345678901234567890", 1).terms().begin()->second ==
        Integer("123456789012345678901234567890"));

  for (const char* bad : {"", "y3", "t2", "y", "t1 *", "(y1", "y1)", "z1", "y1 y2", "t0"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_hecke_expression(bad, 2), std::invalid_argument);
  }
  try {
    parse_hecke_expression("y1 + q", 2);
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& ex) {
    CHECK(std::string(ex.what()).find("'q'") != std::string::npos);
  }
}
