#pragma once

#include <optional>
#include <vector>

#include "chromlie/graph.hpp"
#include "chromlie/rational.hpp"
#include "chromlie/root_mult.hpp"
#include "chromlie/symfunc.hpp"

namespace chromlie {

/// Set partition of the vertices into blocks that each induce a connected
/// subgraph. Blocks are kept sorted by their smallest vertex.
class BondPartition {
 public:
  explicit BondPartition(std::vector<VertexSet> blocks);

  const std::vector<VertexSet>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  /// Partition of block sizes.
  Partition type() const;
  /// Every block of *this lies inside some block of `coarser`.
  bool refines(const BondPartition& coarser) const;
  std::string to_string() const;

  friend bool operator==(const BondPartition&, const BondPartition&) = default;

 private:
  std::vector<VertexSet> blocks_;
};

/// Multiset of non-zero parts with connected support summing to eta(k).
/// Parts are kept in non-increasing (graded-lex) order.
class WeightedBond {
 public:
  explicit WeightedBond(std::vector<RootVector> parts);

  const std::vector<RootVector>& parts() const { return parts_; }
  /// Distinct parts with their multiplicities D(J, bond).
  std::vector<std::pair<RootVector, int>> distinct_parts() const;
  RootVector sum() const;

  friend bool operator==(const WeightedBond&, const WeightedBond&) = default;

 private:
  std::vector<RootVector> parts_;
};

/// Set partition of the vertices into stable blocks.
struct StablePartition {
  std::vector<VertexSet> blocks;
  Partition sizes() const;
};

/// All connected partitions of g, the bottom (all singletons) first and
/// ordered by number of blocks descending, then lexicographically.
std::vector<BondPartition> bond_lattice(const Graph& g);

/// mu(0, pi) over the bond lattice; throws DomainError if pi is absent.
Integer mobius_from_bottom(const std::vector<BondPartition>& lattice, const BondPartition& pi);
/// mu(0, pi) for every element, in lattice order.
std::vector<Integer> mobius_all(const std::vector<BondPartition>& lattice);

std::vector<WeightedBond> weighted_bond_lattice(const Graph& g, const WeightVector& k);

Partition bond_type(const WeightedBond& b);

/// The multiset of parts viewed as roots when every part has
/// multiplicity >= 1, otherwise nothing. Throws DomainError when the
/// table bound is below a part height.
std::optional<std::vector<RootVector>> psi_image(const WeightedBond& b, const MultTable& mults);

std::vector<StablePartition> stable_partitions(const Graph& g);

}  // namespace chromlie
