#include "pathideal/errors.hpp"
#include "pathideal/monomial.hpp"
#include "pathideal/text_io.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace pathideal;
using pathideal::testing::ideal;
using pathideal::testing::mono;

TEST_CASE("divisibility") {
  CHECK(divides(mono("x2*x3", 3), mono("x1*x2*x3", 3)));
  CHECK(divides(mono("1", 4), mono("x1^3*x4", 4)));
  CHECK_FALSE(divides(mono("x1^2", 2), mono("x1*x2", 2)));
  CHECK_THROWS_AS(divides(Monomial(2), Monomial(3)), AmbientMismatch);
}

TEST_CASE("gcd, lcm, mul") {
  CHECK(gcd(mono("x1*x2^2", 3), mono("x2*x3", 3)) == mono("x2", 3));
  CHECK(lcm(mono("x1*x2", 3), mono("x2*x3", 3)) == mono("x1*x2*x3", 3));
  CHECK(mul(mono("x1", 1), mono("x1", 1)) == mono("x1^2", 1));
  CHECK_THROWS_AS(gcd(Monomial(1), Monomial(2)), AmbientMismatch);

  SUBCASE("overflow is rejected, not wrapped") {
    const Monomial big{kDefaultExponentCap};
    CHECK_THROWS_AS(mul(big, Monomial{1}), OverflowError);
    CHECK_THROWS_AS(mul(Monomial{3}, Monomial{3}, 5), OverflowError);
    CHECK_THROWS_AS(pow(Monomial{1, 1}, 4, 7), OverflowError);
  }
}

TEST_CASE("quotient is saturating subtraction") {
  CHECK(quotient(mono("x1*x2*x3", 4), mono("x2*x3*x4", 4)) == mono("x1", 4));
  const auto a = mono("x1^2*x3", 3);
  CHECK(quotient(a, a).is_one());
  // x5x6x7 / x4x5x6 from the quasi-linearity obstruction at n = 7, t = 3.
  CHECK(quotient(mono("x5*x6*x7", 7), mono("x4*x5*x6", 7)) == mono("x7", 7));
}

TEST_CASE("minimalize") {
  const auto m = minimalize(4, {mono("x4", 4), mono("x3*x4", 4), mono("x1*x2*x3", 4)});
  CHECK(m.generators() == std::vector<Monomial>{mono("x4", 4), mono("x1*x2*x3", 4)});
  CHECK(minimalize(3, {mono("x1*x2", 3)}).size() == 1);
  CHECK(minimalize(2, {mono("x1", 2), mono("x1", 2)}).size() == 1);
  CHECK(minimalize(2, {}).is_zero());
  CHECK_THROWS_AS(minimalize(2, {Monomial(3)}), AmbientMismatch);
}

TEST_CASE("canonical generator order is ascending by exponent vector") {
  const auto i = ideal("x1*x2, x3, x2*x3*x1^2", 3);
  CHECK(std::is_sorted(i.generators().begin(), i.generators().end()));
  CHECK(to_text(i) == "(x3, x1*x2)");
}

TEST_CASE("colon by a monomial") {
  CHECK(colon(ideal("x1*x2, x2*x3", 3), mono("x2", 3)) == ideal("x1, x3", 3));
  const auto i = ideal("x1^2*x2, x3", 3);
  CHECK(colon(i, Monomial(3)) == i);
  // (u1, ..., u4) : u5 in I_3(L_7).
  const auto prefix = ideal("x1*x2*x3, x2*x3*x4, x3*x4*x5, x4*x5*x6", 7);
  CHECK(colon(prefix, mono("x5*x6*x7", 7)) == ideal("x4, x1*x2*x3", 7));
  CHECK(colon(MonomialIdeal(3), mono("x1", 3)).is_zero());
}

TEST_CASE("sum and power") {
  const auto i = ideal("x1*x2, x2*x3", 3);
  CHECK(ideal_power(i, 1) == i);
  CHECK(ideal_power(ideal("x1, x2", 2), 2) == ideal("x1^2, x1*x2, x2^2", 2));
  CHECK(ideal_sum(ideal("x1", 2), ideal("x1*x2, x2^3", 2)) == ideal("x1, x2^3", 2));
  CHECK_THROWS_AS(ideal_power(i, 0), DomainError);
  CHECK_THROWS_AS(ideal_power(ideal("x1, x2, x3", 3), 5, 20), CapExceeded);
}

TEST_CASE("generated by variables") {
  CHECK(generated_by_variables(ideal("x4", 4)));
  CHECK_FALSE(generated_by_variables(ideal("x4, x1*x2*x3", 4)));
  CHECK(generated_by_variables(MonomialIdeal(4)));
}

TEST_CASE("text form") {
  CHECK(to_text(Monomial(3)) == "1");
  CHECK(to_text(Monomial{2, 0, 1}) == "x1^2*x3");
  CHECK(parse_monomial("x1^2*x3", 3) == Monomial{2, 0, 1});
  CHECK(parse_monomial(" x2 * x2 ", 2) == Monomial{0, 2});
  CHECK_THROWS_AS(parse_monomial("x4", 3), DomainError);
  CHECK_THROWS_AS(parse_monomial("y1", 3), DomainError);
  CHECK_THROWS_AS(parse_monomial("x1^", 3), DomainError);
  CHECK(parse_ideal("(0)", 2).is_zero());

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = pathideal::testing::random_monomial(rng, 5, 0, 5, 4);
    CHECK(parse_monomial(to_text(m), 5) == m);
  }
}

TEST_CASE("support") {
  CHECK(support(mono("x1*x3^2", 4)).indices() == std::vector<std::size_t>{0, 2});
  CHECK(ideal("x1*x2, x4", 4).support().indices() == std::vector<std::size_t>{0, 1, 3});
  CHECK(Support({0, 1}).disjoint(Support({2, 3})));
  CHECK_FALSE(Support({0, 1}).disjoint(Support({1})));
}

TEST_CASE("property: colon membership") {
  std::mt19937_64 rng(11);
  const auto probes = pathideal::testing::monomials_up_to(4, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const auto i = pathideal::testing::random_ideal(rng, 4, 0, 4, 4, 2);
    const auto m = pathideal::testing::random_monomial(rng, 4, 0, 4, 2);
    const auto c = colon(i, m);
    for (const auto& v : probes) REQUIRE(c.contains(v) == i.contains(mul(v, m)));
  }
}

TEST_CASE("property: minimalize is idempotent and minimal") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Monomial> raw;
    for (int k = 0; k < 8; ++k) raw.push_back(pathideal::testing::random_monomial(rng, 5, 0, 5, 3));
    const auto once = minimalize(5, raw);
    CHECK(minimalize(5, once.generators()) == once);
    for (const auto& a : once.generators())
      for (const auto& b : once.generators())
        if (!(a == b)) CHECK_FALSE(divides(a, b));
    for (const auto& r : raw) CHECK(once.contains(r));
  }
}

TEST_CASE("property: colon distributes over sums") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const auto i = pathideal::testing::random_ideal(rng, 5, 0, 5, 4, 2);
    const auto j = pathideal::testing::random_ideal(rng, 5, 0, 5, 4, 2);
    const auto m = pathideal::testing::random_monomial(rng, 5, 0, 5, 2);
    CHECK(colon(ideal_sum(i, j), m) == ideal_sum(colon(i, m), colon(j, m)));
  }
}

TEST_CASE("property: power associativity") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const auto i = pathideal::testing::random_ideal(rng, 6, 0, 6, 4, 2);
    CHECK(ideal_product(ideal_power(i, 2), i) == ideal_power(i, 3));
  }
}
