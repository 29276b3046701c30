#include <doctest.h>

#include <random>

#include "chromlie/root_mult.hpp"
#include "chromlie/series.hpp"
#include "support.hpp"

using namespace chromlie;
using testing::make_series;

TEST_CASE("series_mul") {
  const QSeries a = make_series(1, 2, {{{0}, 1}, {{1}, -1}});
  const QSeries b = make_series(1, 2, {{{0}, 1}, {{1}, 1}, {{2}, 1}});
  CHECK(series_mul(a, b) == QSeries::one(1, 2));

  const QSeries c = make_series(2, 2, {{{0, 0}, 1}, {{1, 0}, 1}});
  const QSeries d = make_series(2, 2, {{{0, 0}, 1}, {{0, 1}, 1}});
  CHECK(series_mul(c, d) == make_series(2, 2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}));
  CHECK(series_mul(c, QSeries::one(2, 2)) == c);
}

TEST_CASE("series_inverse") {
  const QSeries a = make_series(1, 3, {{{0}, 1}, {{1}, -1}});
  CHECK(series_inverse(a) == make_series(1, 3, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}}));
  CHECK(series_inverse(QSeries::one(2, 4)) == QSeries::one(2, 4));
  const QSeries k2 = make_series(2, 2, {{{0, 0}, 1}, {{1, 0}, -1}, {{0, 1}, -1}});
  CHECK(series_inverse(k2) ==
        make_series(2, 2, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}}));
  CHECK_THROWS_AS(series_inverse(make_series(1, 2, {{{1}, 1}})), DomainError);
}

TEST_CASE("series_log and series_exp") {
  const QSeries a = make_series(1, 3, {{{0}, 1}, {{1}, -1}});
  QSeries expected(1, 3);
  expected.add_term({1}, -1);
  expected.add_term({2}, make_rational(-1, 2));
  expected.add_term({3}, make_rational(-1, 3));
  CHECK(series_log(a) == expected);
  CHECK(series_log(QSeries::one(2, 3)).is_zero());
  CHECK(series_exp(QSeries(2, 3)) == QSeries::one(2, 3));

  QSeries exp_v(1, 2);
  exp_v.add_term({0}, 1);
  exp_v.add_term({1}, 1);
  exp_v.add_term({2}, make_rational(1, 2));
  CHECK(series_exp(make_series(1, 2, {{{1}, 1}})) == exp_v);

  for (long h = 1; h <= 6; ++h) {
    const QSeries b = make_series(2, h, {{{0, 0}, 1}, {{1, 0}, -1}, {{0, 1}, -1}});
    CHECK(series_exp(series_log(b)) == b);
  }
  CHECK_THROWS_AS(series_log(make_series(1, 2, {{{0}, 2}})), DomainError);
}

TEST_CASE("power_with_multiplicity") {
  CHECK(power_with_multiplicity(2, {{RootVector{1, 0}, 1}, {RootVector{0, 1}, 1}}, 2) ==
        make_series(2, 2, {{{0, 0}, 1}, {{1, 0}, -1}, {{0, 1}, -1}, {{1, 1}, 1}}));
  CHECK(power_with_multiplicity(2, {{RootVector{1, 1}, 2}}, 2) ==
        make_series(2, 2, {{{0, 0}, 1}, {{1, 1}, -2}}));
  const MultTable k2 = mult_table(Graph::complete(2), 4);
  CHECK(power_with_multiplicity(2, k2.entries(), 4) ==
        make_series(2, 4, {{{0, 0}, 1}, {{1, 0}, -1}, {{0, 1}, -1}}));
}

namespace {

QSeries random_series(std::mt19937& rng, std::size_t n, long bound) {
  QSeries s(n, bound);
  for (int h = 0; h <= bound; ++h)
    for (const RootVector& e : vectors_of_height(n, h))
      if (rng() % 2 == 0) s.add_term(e, make_rational(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3)));
  return s;
}

}  // namespace

TEST_CASE("series ring axioms on random truncated series") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const long bound = 1 + static_cast<long>(rng() % 4);
    const QSeries a = random_series(rng, n, bound), b = random_series(rng, n, bound), c = random_series(rng, n, bound);
    CHECK(series_mul(a, b) == series_mul(b, a));
    CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    CHECK(series_mul(a, b + c) == series_mul(a, b) + series_mul(a, c));
    CHECK(series_mul(a, QSeries::one(n, bound)) == a);
    QSeries unit = a;
    unit.add_term(RootVector(n), 1 - a.constant_term());
    CHECK(series_mul(unit, series_inverse(unit)) == QSeries::one(n, bound));
    QSeries u = a - QSeries::monomial(n, bound, RootVector(n), a.constant_term());
    u += QSeries::one(n, bound);
    CHECK(series_exp(series_log(u)) == u);
  }
}

TEST_CASE("series json round trip") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const QSeries a = random_series(rng, 3, 3);
    CHECK(series_from_json(series_to_json(a)) == a);
  }
}
