#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "twistinv/groupalgebra.hpp"
#include "twistinv/json_io.hpp"

using namespace twistinv;

namespace {

GroupAlgebraElement random_element(std::mt19937& rng, size_t rank, int terms) {
  std::uniform_int_distribution<int64_t> e(-3, 3);
  std::uniform_int_distribution<int64_t> c(-5, 5);
  GroupAlgebraElement x(rank);
  for (int t = 0; t < terms; ++t) {
    Weight w(rank);
    for (auto& v : w) v = e(rng);
    x.add_term(w, Rat(c(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("monomial multiplication adds exponents") {
  auto a = GroupAlgebraElement::monomial({1, 2}, rat(3));
  auto b = GroupAlgebraElement::monomial({-1, 1}, rat(1, 2));
  auto p = a * b;
  CHECK(p.num_terms() == 1);
  CHECK(p.coeff({0, 3}) == rat(3, 2));
}

TEST_CASE("no zero coefficients are stored") {
  GroupAlgebraElement x(2);
  x.add_term({1, 0}, rat(2));
  x.add_term({1, 0}, rat(-2));
  CHECK(x.is_zero());
  CHECK(x.num_terms() == 0);
}

TEST_CASE("commutative ring axioms on random triples") {
  std::mt19937 rng(17);
  for (int t = 0; t < 60; ++t) {
    auto a = random_element(rng, 2, 3);
    auto b = random_element(rng, 2, 3);
    auto c = random_element(rng, 2, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("exact division") {
  std::mt19937 rng(23);
  for (int t = 0; t < 60; ++t) {
    auto p = random_element(rng, 2, 3);
    auto q = random_element(rng, 2, 3);
    if (q.is_zero()) continue;
    GroupAlgebraElement quot;
    REQUIRE(((p * q).divide_exact(q, &quot)));
    CHECK(quot == p);
  }
  // a known non-divisor
  auto x = GroupAlgebraElement::monomial({1}, rat(1)) + GroupAlgebraElement::constant(1, rat(1));
  auto y = GroupAlgebraElement::monomial({1}, rat(1)) - GroupAlgebraElement::constant(1, rat(1));
  GroupAlgebraElement quot;
  CHECK_FALSE(x.divide_exact(y, &quot));
}

TEST_CASE("unit comparisons") {
  auto x = GroupAlgebraElement::monomial({1, 0}, rat(1)) + GroupAlgebraElement::monomial({0, 1}, rat(2));
  auto shifted = x * GroupAlgebraElement::monomial({3, -1}, rat(-5, 7));
  Rat unit;
  Weight shift;
  CHECK(shifted.equals_up_to_monomial_unit(x, &unit, &shift));
  CHECK(unit == rat(-5, 7));
  CHECK(shift == Weight{3, -1});
  CHECK_FALSE(shifted.equals_up_to_rational_unit(x));
  CHECK((x * rat(9)).equals_up_to_rational_unit(x, &unit));
  CHECK(unit == rat(9));
}

TEST_CASE("rational string round trip") {
  CHECK(rat_to_string(rat(-3, 6)) == "-1/2");
  CHECK(rat_to_string(rat(4, 2)) == "2");
  CHECK(rat_from_string("7/3") == rat(7, 3));
  CHECK(rat_from_string("-9") == rat(-9));
  CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
}

TEST_CASE("json round trip") {
  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto x = random_element(rng, 3, 4);
    auto j = ga_to_json(x);
    CHECK(ga_from_json(j) == x);
  }
}
