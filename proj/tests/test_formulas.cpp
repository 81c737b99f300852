#include "pathideal/errors.hpp"
#include "pathideal/formulas.hpp"
#include "pathideal/linearity.hpp"
#include "pathideal/resolution.hpp"

#include <doctest.h>

#include <limits>

using namespace pathideal;
namespace f = pathideal::formulas;

TEST_CASE("gamma") {
  CHECK(f::gamma(3, 2) == 1);
  CHECK(f::gamma(7, 3) == 4);
  CHECK(f::gamma(4, 3) == 2);
  CHECK(f::gamma(9, 2) == 3);
  CHECK(f::gamma(2, 3) == 0);
  CHECK(f::gamma(0, 4) == 0);
  for (std::int64_t n = 0; n <= 30; ++n) CHECK(f::gamma(n, 1) == 0);

  const auto d = f::decompose(11, 3);
  CHECK(d.p == 2);
  CHECK(d.d == 3);
  CHECK_THROWS_AS(f::gamma(-1, 2), DomainError);
  CHECK_THROWS_AS(f::gamma(5, 0), DomainError);
}

TEST_CASE("regularity of powers") {
  CHECK(f::reg_power(7, 3, 1) == 4);
  CHECK(f::reg_power(7, 3, 2) == 7);
  CHECK(f::reg_power(4, 2, 2) == 3);
  CHECK(f::reg_power(9, 2, 2) == 5);
  CHECK(f::reg_linear_case(6, 3, 4) == 11);
  CHECK(f::reg_linear_case(3, 3, 1) == 2);
  CHECK_THROWS_AS(f::reg_power(2, 3, 1), DomainError);
  CHECK_THROWS_AS(f::reg_power(5, 1, 1), DomainError);
  CHECK_THROWS_AS(f::reg_power(5, 2, 0), DomainError);
  CHECK_THROWS_AS(f::reg_linear_case(7, 3, 1), DomainError);
  CHECK_THROWS_AS(f::reg_power(std::numeric_limits<std::int64_t>::max() / 2, 2,
                               std::numeric_limits<std::int64_t>::max()),
                  OverflowError);
}

TEST_CASE("Betti numbers, projective dimension and step census") {
  CHECK(f::betti_closed_form(5, 3, 2, 0) == 6);
  CHECK(f::betti_closed_form(5, 3, 2, 1) == 6);
  CHECK(f::betti_closed_form(5, 3, 2, 2) == 1);
  CHECK(f::betti_closed_form(5, 3, 2, 3) == 0);
  CHECK(f::betti_closed_form(3, 2, 1, 1) == 1);
  CHECK(f::betti_closed_form(60, 30, 200, 5) > BigInt(std::numeric_limits<std::int64_t>::max()));

  CHECK(f::pd_closed_form(5, 3, 2) == 3);
  CHECK(f::pd_closed_form(4, 3, 5) == 2);
  CHECK(f::pd_closed_form(6, 3, 1) == 2);
  CHECK(f::pd_closed_form(3, 3, 7) == 1);

  CHECK(f::s_k_closed_form(5, 3, 2, 1) == 4);
  CHECK(f::s_k_closed_form(5, 3, 2, 2) == 1);
  CHECK(f::s_k_closed_form(6, 3, 1, 2) == 0);
  CHECK_THROWS_AS(f::s_k_closed_form(5, 3, 2, 0), DomainError);
  CHECK_THROWS_AS(f::betti_closed_form(7, 3, 1, 0), DomainError);
  CHECK_THROWS_AS(f::betti_closed_form(5, 3, 1, -1), DomainError);
  CHECK_THROWS_AS(f::pd_closed_form(5, 3, 0), DomainError);
}

TEST_CASE("linear resolution predicate and tail formula") {
  CHECK(f::linear_resolution_predicate(3, 2));
  CHECK(f::linear_resolution_predicate(6, 3));
  CHECK_FALSE(f::linear_resolution_predicate(7, 3));
  CHECK_THROWS_AS(f::linear_resolution_predicate(2, 3), DomainError);

  CHECK(f::tail_reg(7, 3, 2, 2) == 7);
  CHECK(f::tail_reg(7, 3, 2, 5) == 7);
  CHECK(f::tail_reg(5, 2, 1, 3) == 2);
  CHECK_THROWS_AS(f::tail_reg(6, 3, 1, 2), DomainError);
  CHECK_THROWS_AS(f::tail_reg(7, 3, 1, 1), DomainError);
  CHECK_THROWS_AS(f::tail_reg(7, 3, 1, 6), DomainError);
}

TEST_CASE("property: gamma identities") {
  for (std::int64_t t = 1; t <= 12; ++t) {
    for (std::int64_t n = t + 1; n <= 60; ++n) CHECK(f::gamma_shift_identity(n, t));
    for (std::int64_t a = 1; a <= 40; ++a)
      for (std::int64_t b = 1; b <= 40; ++b) CHECK(f::gamma_superadditive(a, b, t));
  }
}

TEST_CASE("property: gamma is monotone in n with bounded steps") {
  for (std::int64_t t = 1; t <= 12; ++t)
    for (std::int64_t n = 0; n < 80; ++n) {
      const auto step = f::gamma(n + 1, t) - f::gamma(n, t);
      CHECK(step >= 0);
      CHECK(step <= t - 1);
    }
}

TEST_CASE("property: closed forms agree with each other across the linear range") {
  for (std::int64_t t = 2; t <= 10; ++t)
    for (std::int64_t n = t; n <= 2 * t; ++n)
      for (std::int64_t s = 1; s <= 12; ++s) {
        CAPTURE(n);
        CAPTURE(t);
        CAPTURE(s);
        CHECK(f::reg_linear_case(n, t, s) == f::reg_power(n, t, s));
        CHECK(f::betti_closed_form(n, t, s, 0) == binomial(s + n - t, s));
        BigInt euler = 0;
        std::int64_t top = -1;
        for (std::int64_t i = 0; i <= n - t + 1; ++i) {
          const auto b = f::betti_closed_form(n, t, s, i);
          euler += i % 2 ? -b : b;
          if (b != 0) top = i;
        }
        CHECK(euler == 1);
        CHECK(top + 1 == f::pd_closed_form(n, t, s));
        // beta_i = sum_k S_k binom(k, i) plus the first generator at i = 0.
        for (std::int64_t i = 0; i <= n - t; ++i) {
          BigInt via_census = i == 0 ? 1 : 0;
          for (std::int64_t k = 1; k <= n - t; ++k)
            via_census += f::s_k_closed_form(n, t, s, k) * binomial(k, i);
          CHECK(via_census == f::betti_closed_form(n, t, s, i));
        }
      }
}

TEST_CASE("property: Betti closed form counts colon subsets in the quotient order") {
  for (std::uint32_t t = 2; t <= 4; ++t)
    for (std::uint32_t n = t; n <= 2 * t; ++n)
      for (std::uint32_t s = 1; s <= 3; ++s) {
        const PathIdealSpec spec(n, t);
        const auto result =
            linear_quotients_check(spec, s, quotient_order_sort(compositions(s, spec.generator_count())));
        REQUIRE(std::holds_alternative<QuotientCertificate>(result));
        const auto& r = std::get<QuotientCertificate>(result).r;
        for (std::uint32_t i = 0; i <= n - t + 1; ++i) {
          BigInt count = 0;
          for (auto rj : r) count += binomial(rj, i);
          CHECK(count == f::betti_closed_form(n, t, s, i));
        }
      }
}

TEST_CASE("property: closed forms match the homology oracle on small cells") {
  const FieldSpec gf2{2};
  for (std::uint32_t t = 2; t <= 3; ++t)
    for (std::uint32_t n = t; n <= 2 * t; ++n)
      for (std::uint32_t s = 1; s <= 2; ++s) {
        const auto p = ideal_power(path_ideal(PathIdealSpec(n, t)), s);
        const auto table = betti_table(p, gf2);
        const auto totals = table.totals();
        for (std::size_t i = 0; i < totals.size(); ++i)
          CHECK(BigInt(totals[i]) == f::betti_closed_form(n, t, s, i));
        CHECK(regularity_of_quotient(table) == f::reg_power(n, t, s));
        CHECK(projective_dimension_of_quotient(table) == f::pd_closed_form(n, t, s));
      }
}
