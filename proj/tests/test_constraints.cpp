#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "mols/constraints.hpp"
#include "mols/error.hpp"

using namespace mols;

namespace {

// Plain modular-arithmetic oracle for prime q, no Field involved.
std::array<bool, 7> oracle_prime(int q, int a1, int a2) {
  auto m = [q](long long v) { return static_cast<int>(((v % q) + q) % q); };
  std::array<bool, 7> ok{};
  ok[0] = m(2LL * a1 - a2) != 0;
  ok[1] = m(2LL * a2 - a1) != 0;
  ok[2] = m(a1 + a2) != 0;
  ok[3] = m(1LL * a1 * a1 - 1LL * a1 * a2 + 1LL * a2 * a2) != 0;
  ok[4] = m(1LL * a1 * a1 + 1LL * a1 * a2 - 1LL * a2 * a2) != 0;
  ok[5] = m(1LL * a2 * a2 + 1LL * a1 * a2 - 1LL * a1 * a1) != 0;
  ok[6] = m(1LL * a1 * a1 - 3LL * a1 * a2 + 1LL * a2 * a2) != 0;
  return ok;
}

} // namespace

TEST_CASE("constraint evaluation matches the modular oracle on prime fields") {
  for (int q : {5, 7, 11, 13, 29, 41}) {
    CAPTURE(q);
    auto f = make_field(q);
    for (int a1 = 1; a1 < q; ++a1)
      for (int a2 = 1; a2 < q; ++a2) {
        if (a1 == a2) continue;
        ConstraintReport r = check_constraints(*f, a1, a2);
        CHECK(r.ok == oracle_prime(q, a1, a2));
        CHECK(r.q == q);
        CHECK(r.a1 == a1);
        CHECK(r.a2 == a2);
      }
  }
}

TEST_CASE("violations column for the q=13 fan") {
  auto f = make_field(13);
  std::map<int, std::vector<int>> expected = {
      {2, {1}}, {3, {}}, {4, {4}}, {5, {}},  {6, {}},  {7, {2}},
      {8, {}},  {9, {}}, {10, {4}}, {11, {}}, {12, {3}}};
  for (auto& [a2, viol] : expected) {
    CAPTURE(a2);
    ConstraintReport r = check_constraints(*f, 1, a2);
    CHECK(r.violated() == viol);
    CHECK(r.all() == viol.empty());
  }
}

TEST_CASE("swapping the scale factors swaps C1 with C2 and C5 with C6") {
  for (int q : {11, 13}) {
    auto f = make_field(q);
    for (int a1 = 1; a1 < q; ++a1)
      for (int a2 = a1 + 1; a2 < q; ++a2) {
        ConstraintReport r = check_constraints(*f, a1, a2);
        ConstraintReport s = check_constraints(*f, a2, a1);
        CHECK(r.ok[0] == s.ok[1]);
        CHECK(r.ok[1] == s.ok[0]);
        CHECK(r.ok[4] == s.ok[5]);
        CHECK(r.ok[5] == s.ok[4]);
        CHECK(r.ok[2] == s.ok[2]);
        CHECK(r.ok[3] == s.ok[3]);
        CHECK(r.ok[6] == s.ok[6]);
      }
  }
}

TEST_CASE("pairs are reduced before checking") {
  auto f = make_field(13);
  // (2,4) reduces to (7,1): 4^-1 = 10, 2*10 = 20 = 7
  ConstraintReport r = check_constraints(*f, ScalePair{2, 4}, ScalePair{3, 1});
  CHECK(r.a1 == 7);
  CHECK(r.a2 == 3);
  ConstraintReport direct = check_constraints(*f, 7, 3);
  CHECK(r.ok == direct.ok);

  try {
    check_constraints(*f, ScalePair{2, 1}, ScalePair{4, 2}); // same class
    FAIL("same class must throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SameClass);
  }
  try {
    check_constraints(*f, 0, 5);
    FAIL("zero scale factor must throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroScaleFactor);
  }
}

TEST_CASE("good tuple search") {
  auto f13 = make_field(13);
  GoodTupleSearch g = find_good_tuples(*f13, 2, 100);
  CHECK(!g.small_characteristic);
  std::vector<std::vector<int>> expected = {{1, 3}, {1, 5}, {1, 6}, {1, 8}, {1, 9}, {1, 11}};
  CHECK(g.tuples == expected);

  // limit truncates in order
  GoodTupleSearch g3 = find_good_tuples(*f13, 2, 3);
  CHECK(g3.tuples == std::vector<std::vector<int>>(expected.begin(), expected.begin() + 3));

  auto f29 = make_field(29);
  GoodTupleSearch g29 = find_good_tuples(*f29, 2, 200);
  bool has13 = false;
  for (auto& t : g29.tuples) has13 = has13 || t == std::vector<int>{1, 3};
  CHECK(has13);

  auto f41 = make_field(41);
  GoodTupleSearch g41 = find_good_tuples(*f41, 3, 500);
  bool has139 = false;
  for (auto& t : g41.tuples) {
    has139 = has139 || t == std::vector<int>{1, 3, 9};
    CHECK(t.size() == 3);
    CHECK(t[0] == 1);
    CHECK(t[1] < t[2]);
    // every pair inside an admissible tuple is itself clean
    CHECK(check_constraints(*f41, t[0], t[1]).all());
    CHECK(check_constraints(*f41, t[0], t[2]).all());
    CHECK(check_constraints(*f41, t[1], t[2]).all());
  }
  CHECK(has139);
}

TEST_CASE("good tuples in characteristic 2 and the empty case") {
  // in characteristic 2 the quadratic constraints coincide and never vanish
  // over GF(8), so every pair set is admissible
  auto f8 = make_field(8);
  GoodTupleSearch g8 = find_good_tuples(*f8, 2, 100);
  CHECK(g8.small_characteristic);
  CHECK(g8.tuples.size() == 6);
  GoodTupleSearch g87 = find_good_tuples(*f8, 7, 100);
  CHECK(g87.tuples == std::vector<std::vector<int>>{{1, 2, 3, 4, 5, 6, 7}});

  // over GF(4) every pair violates the first quadratic constraint
  auto f4 = make_field(4);
  try {
    find_good_tuples(*f4, 2, 10);
    FAIL("GF(4) admits no clean pair");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoneFound);
  }
}

TEST_CASE("lattice scale factors") {
  auto f5 = make_field(5);
  LatticeFactors lat = lattice_scale_factors(*f5, 4);
  REQUIRE(lat.pairs.size() == 2);
  CHECK(lat.pairs[0] == ScalePair{4, 2});
  CHECK(lat.pairs[1] == ScalePair{3, 3});
  CHECK(lat.reduced[0] == ScalePair{2, 1});
  CHECK(lat.reduced[1] == ScalePair{1, 1});
  REQUIRE(lat.reports.size() == 1);
  // (2,1) over GF(5): 2*a2 - a1 = 0 and a1^2 + a1*a2 - a2^2 = 5 = 0
  CHECK(lat.reports[0].violated() == std::vector<int>{2, 5});

  auto f7 = make_field(7);
  LatticeFactors lat7 = lattice_scale_factors(*f7, 4);
  CHECK(lat7.reduced[0] == ScalePair{3, 1});
  CHECK(lat7.reduced[1] == ScalePair{4, 1});
  REQUIRE(lat7.reports.size() == 1);
  CHECK(lat7.reports[0].violated() == std::vector<int>{3}); // 3 + 4 = 0 mod 7

  auto f9 = make_field(9);
  try {
    lattice_scale_factors(*f9, 4);
    FAIL("composite order must throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPrimeOrder);
  }
  try {
    lattice_scale_factors(*f5, 2);
    FAIL("block size below 3 must throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidBlockSize);
  }
  CHECK_THROWS_AS(lattice_scale_factors(*f5, 6), Error);
}
