#include <doctest.h>

#include <numeric>
#include <random>

#include "chromlie/symfunc.hpp"
#include "support.hpp"

using namespace chromlie;
using testing::make_nvar;

TEST_CASE("partitions") {
  const Partition p{1, 3, 1};
  CHECK(p.parts() == std::vector<int>{3, 1, 1});
  CHECK(p.weight() == 5);
  CHECK(p.length() == 3);
  CHECK(p.centralizer_size() == 3 * 2);
  CHECK(p.to_string() == "3,1,1");
  CHECK(Partition::parse("3,1,1") == p);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(6, 2).size() == 4);
  CHECK_THROWS(Partition{0, 1});
}

TEST_CASE("powersum_expand") {
  CHECK(powersum_expand(PowerSumExpr::single(Partition{1, 1}), 2) ==
        make_nvar(2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}));
  CHECK(powersum_expand(PowerSumExpr::single(Partition{2}), 2) == make_nvar(2, {{{2, 0}, 1}, {{0, 2}, 1}}));
  const PowerSumExpr e = PowerSumExpr::single(Partition{2, 1}) - PowerSumExpr::single(Partition{3});
  CHECK(powersum_expand(e, 2) == make_nvar(2, {{{2, 1}, 1}, {{1, 2}, 1}}));
}

TEST_CASE("monomial_sym") {
  CHECK(monomial_sym(Partition{2, 1}, 2) == make_nvar(2, {{{2, 1}, 1}, {{1, 2}, 1}}));
  CHECK(monomial_sym(Partition{1, 1, 1}, 2).is_zero());
  CHECK(monomial_sym(Partition{2}, 3) == make_nvar(3, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}}));
}

TEST_CASE("augmented_monomial_count") {
  CHECK(augmented_monomial_count(Partition{1, 1}) == 2);
  CHECK(augmented_monomial_count(Partition{2, 1}) == 1);
  CHECK(augmented_monomial_count(Partition{2, 2, 1}) == 2);
}

TEST_CASE("augmented monomials are r! times monomials") {
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (int nvars = 1; nvars <= 4; ++nvars) {
        NVarPoly scaled = monomial_sym(lambda, nvars);
        scaled *= Rational(augmented_monomial_count(lambda));
        CHECK(augmented_monomial_sym(lambda, nvars) == scaled);
      }
}

TEST_CASE("power sums expand to symmetric polynomials") {
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      const NVarPoly p = powersum_expand(PowerSumExpr::single(lambda), 3);
      CHECK(p.permuted({1, 0, 2}) == p);
      CHECK(p.permuted({2, 1, 0}) == p);
      // p_lambda(1,...,1) = N^l(lambda)
      long expected = 1;
      for (int i = 0; i < lambda.length(); ++i) expected *= 3;
      CHECK(p.coefficient_sum() == expected);
    }
}

TEST_CASE("principal specialization") {
  const PowerSumExpr e = PowerSumExpr::single(Partition{1, 1}) - PowerSumExpr::single(Partition{2});
  CHECK(e.principal_specialization() == std::vector<Rational>{0, -1, 1});
}

TEST_CASE("power sum products") {
  const PowerSumExpr a = PowerSumExpr::single(Partition{2}, 3);
  const PowerSumExpr b = PowerSumExpr::single(Partition{1}) + PowerSumExpr::single(Partition{2});
  const PowerSumExpr ab = a * b;
  CHECK(ab.coefficient(Partition{2, 1}) == 3);
  CHECK(ab.coefficient(Partition{2, 2}) == 3);
  CHECK(powersum_expand(ab, 3) == powersum_expand(a, 3) * powersum_expand(b, 3));
}

TEST_CASE("power sum json round trip") {
  PowerSumExpr e = PowerSumExpr::single(Partition{3, 1}, make_rational(-5, 2));
  e.add_term(Partition{1, 1, 1, 1}, 7);
  CHECK(powersum_from_json(powersum_to_json(e)) == e);
}
