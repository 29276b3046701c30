#include <doctest.h>

#include "chromlie/chroma.hpp"
#include "chromlie/corpus.hpp"
#include "chromlie/lattice.hpp"
#include "support.hpp"

using namespace chromlie;
using testing::make_nvar;
using testing::make_poly;

namespace {

const Graph k2 = Graph::complete(2);
const Graph p3 = Graph::path(3);
const Graph k3 = Graph::complete(3);

}  // namespace

TEST_CASE("count_colorings_brute") {
  CHECK(count_colorings_brute(k2, WeightVector({1, 1}), 2) == 2);
  CHECK(count_colorings_brute(k2, WeightVector({1, 1}), 0) == 0);
  CHECK(count_colorings_brute(p3, WeightVector::ones(3), 2) == 2);
  CHECK(count_colorings_brute(k2, WeightVector({2, 1}), 4) == 12);
}

TEST_CASE("stable_tuple_counts") {
  CHECK(stable_tuple_counts(k2, WeightVector({1, 1})).counts == std::map<int, Integer>{{2, 2}});
  CHECK(stable_tuple_counts(Graph::edgeless(2), WeightVector({1, 1})).counts == std::map<int, Integer>{{1, 1}, {2, 2}});
  CHECK(stable_tuple_counts(k2, WeightVector({2, 1})).counts == std::map<int, Integer>{{3, 3}});
}

TEST_CASE("gen_chromatic_poly") {
  CHECK(gen_chromatic_poly(k2, WeightVector({1, 1})) == make_poly({0, -1, 1}));
  CHECK(gen_chromatic_poly(p3, WeightVector::ones(3)) == make_poly({0, 1, -2, 1}));
  // 3 C(q,3) = q(q-1)(q-2)/2
  CHECK(gen_chromatic_poly(k2, WeightVector({2, 1})) ==
        make_poly({0, 1, make_rational(-3, 2), make_rational(1, 2)}));
}

TEST_CASE("gen_chromatic_poly matches deletion-contraction at k = 1") {
  for (const Graph& g : enumerate_corpus(6, false))
    CHECK(gen_chromatic_poly(g, WeightVector::ones(g.vertex_count())) == testing::deletion_contraction(g));
}

TEST_CASE("csf_bruteforce") {
  CHECK(csf_bruteforce(k2, WeightVector({1, 1}), 2) == make_nvar(2, {{{1, 1}, 2}}));
  CHECK(csf_bruteforce(k2, WeightVector({1, 1}), 3) ==
        make_nvar(3, {{{1, 1, 0}, 2}, {{1, 0, 1}, 2}, {{0, 1, 1}, 2}}));
  CHECK(csf_bruteforce(Graph::edgeless(1), WeightVector({2}), 2) == make_nvar(2, {{{1, 1}, 1}}));
}

TEST_CASE("csf_mainthm") {
  const PowerSumExpr k2_expected = PowerSumExpr::single(Partition{1, 1}) - PowerSumExpr::single(Partition{2});
  CHECK(csf_mainthm(k2, WeightVector({1, 1}), mult_table(k2, 2)) == k2_expected);
  PowerSumExpr p3_expected = PowerSumExpr::single(Partition{1, 1, 1}) + PowerSumExpr::single(Partition{3});
  p3_expected.add_term(Partition{2, 1}, -2);
  CHECK(csf_mainthm(p3, WeightVector::ones(3), mult_table(p3, 3)) == p3_expected);

  const PowerSumExpr x = csf_mainthm(k2, WeightVector({2, 1}), mult_table(k2, 3));
  CHECK(powersum_expand(x, 3) == csf_bruteforce(k2, WeightVector({2, 1}), 3));
  CHECK_THROWS_AS(csf_mainthm(k2, WeightVector({2, 2}), mult_table(k2, 3)), DomainError);
}

TEST_CASE("csf_stanley") {
  CHECK(csf_stanley(k2) == PowerSumExpr::single(Partition{1, 1}) - PowerSumExpr::single(Partition{2}));
  PowerSumExpr p3_expected = PowerSumExpr::single(Partition{1, 1, 1}) + PowerSumExpr::single(Partition{3});
  p3_expected.add_term(Partition{2, 1}, -2);
  CHECK(csf_stanley(p3) == p3_expected);
  PowerSumExpr k3_expected = PowerSumExpr::single(Partition{1, 1, 1}) + PowerSumExpr::single(Partition{3}, 2);
  k3_expected.add_term(Partition{2, 1}, -3);
  CHECK(csf_stanley(k3) == k3_expected);
}

TEST_CASE("csf_mainthm matches colourings for repeated parts") {
  const Graph star = Graph(4, {{1, 2}, {1, 3}, {1, 4}});
  for (const WeightVector& k : {WeightVector({2, 2, 1, 1}), WeightVector({1, 2, 2, 1}), WeightVector({2, 2, 2, 0})}) {
    const int nvars = static_cast<int>(k.height());
    const PowerSumExpr x = csf_mainthm(star, k, mult_table(star, nvars));
    CHECK(powersum_expand(x, nvars) == csf_bruteforce(star, k, nvars));
  }
}

TEST_CASE("chromatic_discriminant") {
  CHECK(chromatic_discriminant(k2, mult_table(k2, 2)) == 1);
  CHECK(chromatic_discriminant(p3, mult_table(p3, 3)) == 1);
  CHECK(chromatic_discriminant(k3, mult_table(k3, 3)) == 2);
  CHECK(chromatic_discriminant(Graph::cycle(4), mult_table(Graph::cycle(4), 4)) == 3);
  CHECK_THROWS_AS(chromatic_discriminant(Graph::edgeless(2), mult_table(Graph::edgeless(2), 2)), DomainError);
}

TEST_CASE("chmply_from_mults") {
  CHECK(chmply_from_mults(k2, WeightVector({1, 1}), mult_table(k2, 2)) == make_poly({0, -1, 1}));
  CHECK(chmply_from_mults(p3, WeightVector::ones(3), mult_table(p3, 3)) == make_poly({0, 1, -2, 1}));
  CHECK(chmply_from_mults(k2, WeightVector({2, 2}), mult_table(k2, 4)) == gen_chromatic_poly(k2, WeightVector({2, 2})));
}

TEST_CASE("join_graph") {
  const Graph joined = join_graph(k2, WeightVector({2, 1}));
  CHECK(canonical_code(joined) == canonical_code(k3));
  CHECK(gen_chromatic_poly(k2, WeightVector({2, 1})).scaled(2) == gen_chromatic_poly(joined, WeightVector::ones(3)));
  CHECK(canonical_code(join_graph(p3, WeightVector({1, 0, 1}))) == canonical_code(Graph::edgeless(2)));
  CHECK(canonical_code(join_graph(Graph::edgeless(1), WeightVector({3}))) == canonical_code(k3));
}

TEST_CASE("generalized chromatic polynomials count colourings") {
  for (const Graph& g : enumerate_corpus(3, false))
    for (int a = 0; a <= 2; ++a) {
      std::vector<int> k(static_cast<std::size_t>(g.vertex_count()), 1);
      k[0] = a + 1;
      const WeightVector w(k);
      const ChromaticPolynomial p = gen_chromatic_poly(g, w);
      for (long q = 0; q <= 6; ++q) CHECK(p.evaluate(q) == Rational(count_colorings_brute(g, w, q)));
    }
}
