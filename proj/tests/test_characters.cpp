#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "decat/characters.hpp"
#include "decat/oracles.hpp"
#include "decat/verify.hpp"

using namespace decat;

namespace {

SymPolynomial poly(int n, std::initializer_list<std::pair<Exponents, int>> terms) {
  SymPolynomial::Terms t;
  for (const auto& [a, c] : terms) t.emplace(a, c);
  return SymPolynomial(n, std::move(t));
}

}  // namespace

TEST_CASE("construction enforces symmetry") {
  CHECK_THROWS_AS(poly(2, {{{1, 0}, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(poly(2, {{{1, 0, 0}, 1}}), std::invalid_argument);
  CHECK_NOTHROW(poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
  CHECK(poly(2, {{{1, 0}, 0}, {{0, 1}, 0}}).is_zero());
}

TEST_CASE("schur polynomials") {
  CHECK(schur({1}, 2) == poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
  CHECK(schur({2, 1}, 2) == poly(2, {{{2, 1}, 1}, {{1, 2}, 1}}));
  CHECK(schur({1, 1, 1}, 2).is_zero());
  CHECK(schur({}, 3) == SymPolynomial::constant(3, 1));
  // s_(2,1)(x1,x2,x3) has 8 monomials counted with multiplicity (dimension of V(2,1) for GL_3)
  Integer dim = 0;
  const SymPolynomial s21 = schur({2, 1}, 3);
  for (const auto& [a, c] : s21.terms()) dim += c;
  CHECK(dim == 8);
  CHECK(to_string(schur({2}, 2)) == "x1^2 + x1x2 + x2^2");
}

TEST_CASE("schur polynomials agree with Jacobi-Trudi") {
  for (const Partition& p : partitions_up_to(5))
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(to_string(p));
      CAPTURE(n);
      CHECK(schur(p, n) == oracle::jacobi_trudi(p, n));
    }
}

TEST_CASE("restriction to fewer variables") {
  CHECK(restrict_last_var(schur({1}, 2)) == schur({1}, 1));
  CHECK(restrict_last_var(schur({2, 1}, 2)).is_zero());
  CHECK(restrict_last_var(schur({2}, 2)) == poly(1, {{{2}, 1}}));
  for (const Partition& p : partitions_up_to(6))
    for (int n = p.length() + 1; n <= 4; ++n) CHECK(restrict_last_var(schur(p, n)) == schur(p, n - 1));
}

TEST_CASE("schur expansion") {
  const SymPolynomial f = schur({2}, 3) * schur({1}, 3);
  const auto coeffs = schur_expansion(f);
  CHECK(coeffs.size() == 2);
  CHECK(coeffs.at(Partition{3}) == 1);
  CHECK(coeffs.at(Partition({2, 1})) == 1);
  // s_1^3 = s_3 + 2 s_21 + s_111
  const SymPolynomial cube = schur({1}, 3) * schur({1}, 3) * schur({1}, 3);
  CHECK(as_multiset(schur_expansion(cube)) == std::vector<Partition>{{3}, {2, 1}, {2, 1}, {1, 1, 1}});
  CHECK_THROWS_AS(as_multiset(schur_expansion(Integer(-1) * schur({1}, 2))), std::logic_error);
}

TEST_CASE("branching") {
  CHECK(branch_r1({1}, 1) == std::vector<Partition>{{}});
  CHECK(branch_r1({2, 1}, 3) == std::vector<Partition>{{2}, {1, 1}});
  CHECK(branch_r1({3}, 3) == std::vector<Partition>{{2}});
  CHECK_THROWS_AS(branch_r1({2, 1}, 2), std::invalid_argument);
  // truncated: (2,1) in 1 + 1 variables only sees (2)
  CHECK(restriction_expansion({2, 1}, 1) == std::vector<Partition>{{2}});
}

TEST_CASE("pieri") {
  CHECK(pieri_mult({}, 1) == std::vector<Partition>{{1}});
  CHECK(pieri_mult({1}, 2) == std::vector<Partition>{{2}, {1, 1}});
  CHECK(pieri_mult({2, 1}, 3) == std::vector<Partition>{{3, 1}, {2, 2}, {2, 1, 1}});
  CHECK_THROWS_AS(pieri_mult({2, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(pieri_mult({1, 1, 1}, 3), std::invalid_argument);
  CHECK(pieri_expansion({2, 1}, 2) == std::vector<Partition>{{3, 1}, {2, 2}});
}

TEST_CASE("coherence with box enumeration") {
  const auto r = check_characters(5, 4);
  CHECK_MESSAGE(r.passed, r.counterexample);
  const auto d = check_decategorification(Modulus(3), 5);
  CHECK_MESSAGE(d.passed, d.counterexample);
}
