#include <doctest.h>

#include "locmat/error.hpp"
#include "locmat/linalg.hpp"

using namespace locmat;

namespace {

CycElem q(int l, long n) { return CycElem(l, Rational(n)); }

// Dot product of a sparse row with a sparse vector.
CycElem dot(const SparseVector& a, const SparseVector& b, int l) {
  CycElem acc = CycElem::zero(l);
  for (const auto& [i, x] : a) {
    for (const auto& [j, y] : b) {
      if (i == j) acc += x * y;
    }
  }
  return acc;
}

}  // namespace

TEST_CASE("rank and nullspace over Q") {
  const int l = 2;
  RowEchelon r(4, l);
  SparseVector r1{{0, q(l, 1)}, {1, q(l, 2)}, {3, q(l, 1)}};
  SparseVector r2{{0, q(l, 2)}, {1, q(l, 4)}, {3, q(l, 2)}};
  SparseVector r3{{1, q(l, 1)}, {2, q(l, -1)}};
  CHECK(r.insert(r1));
  CHECK_FALSE(r.insert(r2));
  CHECK(r.insert(r3));
  CHECK(r.rank() == 2);
  auto ns = r.nullspace();
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) {
    CHECK(dot(r1, v, l).is_zero());
    CHECK(dot(r3, v, l).is_zero());
  }
  // Free columns are 2 and 3, each carrying a leading 1.
  CHECK(ns[0].back().first == 2);
  CHECK(ns[1].back().first == 3);
}

TEST_CASE("elimination over Q(z_3)") {
  const int l = 3;
  CycElem z = root_power(l, 1);
  RowEchelon r(2, l);
  CHECK(r.insert({{0, z}, {1, CycElem::one(l)}}));
  // z^2 * row1 = (1, z^2): dependent.
  CHECK_FALSE(r.insert({{0, CycElem::one(l)}, {1, root_power(l, 2)}}));
  auto ns = r.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK((z * ns[0][0].second + ns[0][1].second).is_zero());
}

TEST_CASE("empty system and bad input") {
  RowEchelon r(3, 5);
  CHECK(r.nullspace().size() == 3);
  CHECK_FALSE(r.insert({}));
  CHECK_THROWS_AS(r.insert({{3, CycElem::one(5)}}), DimensionMismatch);
  CHECK_THROWS_AS(r.insert({{0, CycElem::one(3)}}), LevelMismatch);
}
