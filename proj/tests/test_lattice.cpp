#include <doctest.h>

#include "chromlie/corpus.hpp"
#include "chromlie/lattice.hpp"
#include "chromlie/root_mult.hpp"

using namespace chromlie;

namespace {

BondPartition bond(std::vector<std::vector<int>> blocks) {
  std::vector<VertexSet> sets;
  for (const auto& b : blocks) {
    std::uint64_t mask = 0;
    for (int v : b) mask |= 1ULL << (v - 1);
    sets.push_back(VertexSet::from_mask(mask));
  }
  return BondPartition(sets);
}

}  // namespace

TEST_CASE("bond_lattice") {
  const auto p3 = bond_lattice(Graph::path(3));
  REQUIRE(p3.size() == 4);
  CHECK(p3.front() == bond({{1}, {2}, {3}}));
  CHECK(p3.back() == bond({{1, 2, 3}}));
  CHECK(std::find(p3.begin(), p3.end(), bond({{1, 2}, {3}})) != p3.end());
  CHECK(std::find(p3.begin(), p3.end(), bond({{1}, {2, 3}})) != p3.end());
  CHECK(bond_lattice(Graph::complete(2)).size() == 2);
  CHECK(bond_lattice(Graph::complete(3)).size() == 5);
  CHECK(bond_lattice(Graph::complete(4)).size() == 15);
}

TEST_CASE("mobius_from_bottom") {
  const auto p3 = bond_lattice(Graph::path(3));
  CHECK(mobius_from_bottom(p3, bond({{1}, {2}, {3}})) == 1);
  CHECK(mobius_from_bottom(p3, bond({{1, 2}, {3}})) == -1);
  CHECK(mobius_from_bottom(p3, bond({{1, 2, 3}})) == 1);
  CHECK_THROWS_AS(mobius_from_bottom(p3, bond({{1, 3}, {2}})), DomainError);
  const auto k3 = bond_lattice(Graph::complete(3));
  CHECK(mobius_from_bottom(k3, bond({{1, 2, 3}})) == 2);
}

TEST_CASE("weighted_bond_lattice") {
  const Graph k2 = Graph::complete(2);
  const auto ones = weighted_bond_lattice(k2, WeightVector({1, 1}));
  CHECK(ones.size() == 2);
  CHECK(std::find(ones.begin(), ones.end(), WeightedBond({{1, 0}, {0, 1}})) != ones.end());
  CHECK(std::find(ones.begin(), ones.end(), WeightedBond({{1, 1}})) != ones.end());

  const auto twos = weighted_bond_lattice(k2, WeightVector({2, 1}));
  CHECK(twos.size() == 4);
  for (const WeightedBond& b : {WeightedBond({{1, 0}, {1, 0}, {0, 1}}), WeightedBond({{2, 0}, {0, 1}}),
                                WeightedBond({{1, 0}, {1, 1}}), WeightedBond({{2, 1}})})
    CHECK(std::find(twos.begin(), twos.end(), b) != twos.end());

  CHECK(weighted_bond_lattice(Graph::path(3), WeightVector::ones(3)).size() == 4);
}

TEST_CASE("bond_type") {
  CHECK(bond_type(WeightedBond({{1, 1}})) == Partition{2});
  CHECK(bond_type(WeightedBond({{1, 0}, {1, 0}, {0, 1}})) == Partition{1, 1, 1});
  CHECK(bond_type(WeightedBond({{2, 0}, {0, 1}})) == Partition{2, 1});
}

TEST_CASE("psi_image") {
  const MultTable k2 = mult_table(Graph::complete(2), 3);
  CHECK(psi_image(WeightedBond({{1, 1}}), k2) == std::vector<RootVector>{{1, 1}});
  CHECK(psi_image(WeightedBond({{2, 1}}), k2).has_value());
  const MultTable p3 = mult_table(Graph::path(3), 3);
  CHECK(psi_image(WeightedBond({{1, 1, 1}}), p3).has_value());
  // 2 alpha_1 is not a root of the free partially commutative Lie algebra
  CHECK_FALSE(psi_image(WeightedBond({{2, 0}, {0, 1}}), k2).has_value());
  CHECK_THROWS_AS(psi_image(WeightedBond({{2, 2}}), k2), DomainError);
}

TEST_CASE("weighted bonds have connected parts summing to eta") {
  for (const Graph& g : enumerate_corpus(4, false)) {
    std::vector<int> k(static_cast<std::size_t>(g.vertex_count()), 1);
    k[0] = 2;
    const WeightVector w(k);
    const auto bonds = weighted_bond_lattice(g, w);
    for (std::size_t i = 0; i < bonds.size(); ++i) {
      CHECK(bonds[i].sum() == w.eta());
      for (const RootVector& part : bonds[i].parts()) CHECK(has_connected_support(g, part));
      for (std::size_t j = i + 1; j < bonds.size(); ++j) CHECK_FALSE(bonds[i] == bonds[j]);
    }
  }
}

TEST_CASE("stable_partitions") {
  const auto p3 = stable_partitions(Graph::path(3));
  CHECK(p3.size() == 2);
  CHECK(stable_partitions(Graph::complete(3)).size() == 1);
  CHECK(stable_partitions(Graph::edgeless(3)).size() == 5);
}
