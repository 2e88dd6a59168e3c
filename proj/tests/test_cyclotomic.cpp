#include <doctest.h>

#include <random>

#include "locmat/cyclotomic.hpp"
#include "locmat/error.hpp"
#include "oracles.hpp"

using namespace locmat;

namespace {

CycElem random_elem(std::mt19937_64& rng, int l) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> c;
  for (int i = 0; i < euler_phi(l); ++i) c.emplace_back(num(rng), den(rng));
  for (auto& q : c) q.canonicalize();
  return CycElem(l, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  for (int l = 1; l <= 40; ++l) {
    CAPTURE(l);
    CHECK(cyclotomic_polynomial(l) == oracle::cyclotomic_by_moebius(l));
    CHECK(static_cast<int>(cyclotomic_polynomial(l).size()) - 1 == euler_phi(l));
  }
  // First cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
  auto phi105 = cyclotomic_polynomial(105);
  CHECK(phi105[7] == -2);
  CHECK_THROWS_AS(cyclotomic_polynomial(0), DomainError);
}

TEST_CASE("field operations at l = 3") {
  const int l = 3;
  CycElem one = CycElem::one(l);
  CycElem z = root_power(l, 1);
  // (1 + z)(1 - z) = 1 - z^2 = 2 + z since z^2 = -1 - z.
  CycElem expected(l, std::vector<Rational>{2, 1});
  CHECK((one + z) * (one - z) == expected);
  CHECK(to_string(expected) == "2 + 1*z");
  CHECK(z.inv() == root_power(l, l - 1));
  CHECK(z + CycElem::zero(l) == z);
  CHECK(to_string(root_power(l, 2)) == "-1 - 1*z");
}

TEST_CASE("root_power") {
  CHECK(root_power(4, 2) == CycElem(4, Rational(-1)));
  CHECK(root_power(5, -1) == root_power(5, 4));
  CHECK(root_power(3, 3).is_one());
  CHECK(root_power(7, 0).is_one());
  CHECK(root_power(2, 1) == CycElem(2, Rational(-1)));
}

TEST_CASE("z is a primitive root of Phi_l") {
  for (int l = 2; l <= 30; ++l) {
    CAPTURE(l);
    CycElem z = root_power(l, 1);
    CHECK(CycElem::evaluate(cyclotomic_polynomial(l), z).is_zero());
    CHECK(z.pow(l).is_one());
    for (int k = 1; k < l; ++k) CHECK_FALSE(z.pow(k).is_one());
    CHECK(z.pow(-1) == z.inv());
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(11);
  for (int l = 2; l <= 12; ++l) {
    for (int trial = 0; trial < 25; ++trial) {
      auto a = random_elem(rng, l);
      auto b = random_elem(rng, l);
      auto c = random_elem(rng, l);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * b == b * a);
      REQUIRE(a - a == CycElem::zero(l));
      if (!a.is_zero()) REQUIRE((a.inv() * a).is_one());
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(CycElem::zero(3).inv(), DivisionByZero);
  CHECK_THROWS_AS(CycElem::one(3) + CycElem::one(4), LevelMismatch);
  CHECK_THROWS_AS(CycElem(1), DomainError);
}

TEST_CASE("printing") {
  CHECK(to_string(CycElem::zero(5)) == "0");
  CHECK(to_string(CycElem(5, Rational(-3, 2))) == "-3/2");
  CHECK(to_string(CycElem(5, std::vector<Rational>{0, 0, Rational(1, 2)})) == "1/2*z^2");
  CHECK(to_string(CycElem(5, std::vector<Rational>{1, -1})) == "1 - 1*z");
}
