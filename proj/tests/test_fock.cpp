#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "decat/fock.hpp"
#include "decat/verify.hpp"

using namespace decat;

namespace {

FockVector v(std::initializer_list<int> parts) { return FockVector::basis(Partition(parts)); }

Residue r(long i, int e) { return Residue(i, Modulus(e)); }

}  // namespace

TEST_CASE("vector arithmetic drops zero coefficients") {
  FockVector x = v({2}) + v({1, 1});
  x -= v({2});
  CHECK(x == v({1, 1}));
  x *= 0;
  CHECK(x.is_zero());
  CHECK((Integer(3) * v({1})).coefficient(Partition{1}) == 3);
  CHECK(to_string(FockVector{}) == "0");
}

TEST_CASE("apply_f") {
  CHECK(apply_f(v({}), r(0, 0)) == v({1}));
  CHECK(apply_f(v({}), r(0, 3)) == v({1}));
  CHECK(apply_f(v({2}), r(2, 3)) == v({3}) + v({2, 1}));
  CHECK(apply_f(v({2}), r(0, 3)).is_zero());
  // e = 0 keeps the two addable boxes of (2) apart
  CHECK(apply_f(v({2}), r(2, 0)) == v({3}));
  CHECK(apply_f(v({2}), r(-1, 0)) == v({2, 1}));
}

TEST_CASE("apply_e") {
  CHECK(apply_e(v({}), r(0, 3)).is_zero());
  CHECK(apply_e(v({2, 1}), r(2, 3)) == v({2}));
  CHECK(apply_e(v({3, 1}), r(2, 3)) == v({2, 1}) + v({3}));
  CHECK(apply_e(v({3, 1}), r(2, 0)) == v({2, 1}));
}

TEST_CASE("apply_h") {
  CHECK(apply_h(v({}), r(0, 3)) == v({}));
  CHECK(apply_h(v({2, 1}), r(2, 3)).is_zero());
  CHECK(apply_h(v({1}), r(0, 2)) == Integer(-1) * v({1}));
}

TEST_CASE("weights") {
  CHECK(weight({}, Modulus(3)).alpha_mult().empty());
  CHECK(weight({2, 1}, Modulus(3)).alpha_mult() == std::map<long, long>{{0, 1}, {1, 1}, {2, 1}});
  CHECK(weight({2}, Modulus(2)) == weight({1, 1}, Modulus(2)));
  CHECK(weight({2}, Modulus(2)).alpha_mult() == std::map<long, long>{{0, 1}, {1, 1}});
  CHECK(weight({2}, Modulus(3)) != weight({1, 1}, Modulus(3)));
  CHECK(weight({2}, Modulus(0)).alpha_mult() == std::map<long, long>{{0, 1}, {1, 1}});
  CHECK_THROWS_AS(weight({}, Modulus(3)).plus_alpha(r(0, 3)), std::invalid_argument);
}

TEST_CASE("Cartan matrix") {
  CHECK(cartan_entry(r(0, 2), r(0, 2)) == 2);
  CHECK(cartan_entry(r(0, 2), r(1, 2)) == -2);
  CHECK(cartan_entry(r(0, 3), r(2, 3)) == -1);
  CHECK(cartan_entry(r(0, 5), r(2, 5)) == 0);
  CHECK(cartan_entry(r(0, 5), r(4, 5)) == -1);
  CHECK(cartan_entry(r(-1, 0), r(0, 0)) == -1);
  CHECK(cartan_entry(r(-1, 0), r(1, 0)) == 0);
}

TEST_CASE("op_matrix") {
  const auto f0 = op_matrix(OpKind::F, r(0, 2), 0);
  CHECK(f0.rows == std::vector<Partition>{{1}});
  CHECK(f0.cols == std::vector<Partition>{{}});
  REQUIRE(f0.entries.size() == 1);
  CHECK(f0.at(0, 0) == 1);

  const auto e2 = op_matrix(OpKind::E, r(2, 3), 3);
  CHECK(e2.cols == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(e2.rows == std::vector<Partition>{{2}, {1, 1}});
  // column (2,1) has a single 1 in row (2)
  CHECK(e2.at(0, 1) == 1);
  CHECK(e2.at(1, 1) == 0);

  const auto h = op_matrix(OpKind::H, r(0, 5), 0);
  REQUIRE(h.entries.size() == 1);
  CHECK(h.at(0, 0) == 1);

  CHECK(op_matrix(OpKind::E, r(0, 3), 0).rows.empty());
  CHECK(op_matrix(OpKind::E, r(0, 3), 0).entries.empty());
  CHECK_THROWS_AS(op_matrix(OpKind::F, r(0, 3), -1), std::invalid_argument);
}

TEST_CASE("active residue windows") {
  CHECK(active_residues(Modulus(3), 7).size() == 3);
  const auto inf = active_residues(Modulus(0), 4);
  CHECK(inf.size() == 11);
  CHECK(inf.front().value() == -5);
  CHECK(inf.back().value() == 5);
}

TEST_CASE("Kac-Moody relations on small degrees") {
  for (int e : {0, 2, 3, 5}) {
    CAPTURE(e);
    const auto comm = check_commutators(Modulus(e), 6);
    CHECK_MESSAGE(comm.passed, comm.counterexample);
    const auto cartan = check_cartan(Modulus(e), 6);
    CHECK_MESSAGE(cartan.passed, cartan.counterexample);
    const auto integ = check_integrability(Modulus(e), 6);
    CHECK_MESSAGE(integ.passed, integ.counterexample);
    const auto tr = check_transposes(Modulus(e), 6);
    CHECK_MESSAGE(tr.passed, tr.counterexample);
  }
  for (int e : {0, 2, 3, 5}) {
    const auto serre = check_serre(Modulus(e), 5);
    CHECK_MESSAGE(serre.passed, serre.counterexample);
  }
}
