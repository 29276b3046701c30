#include "chromlie/lattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "chromlie/error.hpp"

namespace chromlie {

namespace {
bool by_min_vertex(VertexSet a, VertexSet b) { return a.min() < b.min(); }
}  // namespace

BondPartition::BondPartition(std::vector<VertexSet> blocks) : blocks_(std::move(blocks)) {
  std::uint64_t seen = 0;
  for (VertexSet b : blocks_) {
    if (b.empty()) throw DomainError("empty block in partition");
    if (seen & b.mask()) throw DomainError("overlapping blocks in partition");
    seen |= b.mask();
  }
  std::sort(blocks_.begin(), blocks_.end(), by_min_vertex);
}

Partition BondPartition::type() const {
  std::vector<int> sizes;
  for (VertexSet b : blocks_) sizes.push_back(b.size());
  return Partition(std::move(sizes));
}

bool BondPartition::refines(const BondPartition& coarser) const {
  return std::all_of(blocks_.begin(), blocks_.end(), [&](VertexSet b) {
    return std::any_of(coarser.blocks_.begin(), coarser.blocks_.end(),
                       [&](VertexSet c) { return (b.mask() & ~c.mask()) == 0; });
  });
}

std::string BondPartition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += '|';
    auto members = blocks_[i].members();
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(members[j]);
    }
  }
  return s;
}

WeightedBond::WeightedBond(std::vector<RootVector> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_)
    if (p.is_zero()) throw DomainError("zero part in weighted bond");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::vector<std::pair<RootVector, int>> WeightedBond::distinct_parts() const {
  std::vector<std::pair<RootVector, int>> out;
  for (const auto& p : parts_) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

RootVector WeightedBond::sum() const {
  if (parts_.empty()) return {};
  RootVector s(parts_.front().size());
  for (const auto& p : parts_) s += p;
  return s;
}

Partition StablePartition::sizes() const {
  std::vector<int> s;
  for (VertexSet b : blocks) s.push_back(b.size());
  return Partition(std::move(s));
}

// ---------------------------------------------------------------- bond lattice

namespace {
// Set partitions of `rest` whose blocks all satisfy `admissible`; the block
// containing the smallest remaining vertex is chosen first.
void set_partitions(std::uint64_t rest, std::vector<VertexSet>& cur,
                    const std::function<bool(std::uint64_t)>& admissible,
                    std::vector<std::vector<VertexSet>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  const std::uint64_t low = rest & (~rest + 1);
  const std::uint64_t others = rest & ~low;
  // enumerate subsets of `others` joined with `low`
  std::uint64_t sub = others;
  while (true) {
    const std::uint64_t block = sub | low;
    if (admissible(block)) {
      cur.push_back(VertexSet::from_mask(block));
      set_partitions(rest & ~block, cur, admissible, out);
      cur.pop_back();
    }
    if (sub == 0) break;
    sub = (sub - 1) & others;
  }
}
}  // namespace

std::vector<BondPartition> bond_lattice(const Graph& g) {
  std::vector<std::vector<VertexSet>> raw;
  std::vector<VertexSet> cur;
  set_partitions(
      g.all_vertices().mask(), cur,
      [&](std::uint64_t b) { return is_connected(g, VertexSet::from_mask(b)); }, raw);
  std::vector<BondPartition> out;
  out.reserve(raw.size());
  for (auto& blocks : raw) out.emplace_back(std::move(blocks));
  std::sort(out.begin(), out.end(), [](const BondPartition& a, const BondPartition& b) {
    if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
    return std::lexicographical_compare(
        a.blocks().begin(), a.blocks().end(), b.blocks().begin(), b.blocks().end(),
        [](VertexSet x, VertexSet y) { return x.members() < y.members(); });
  });
  return out;
}

std::vector<Integer> mobius_all(const std::vector<BondPartition>& lattice) {
  // Elements are sorted by block count descending, so everything strictly
  // below an element appears before it.
  std::vector<Integer> mu(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (i == 0) {
      mu[i] = 1;
      continue;
    }
    Integer s = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (lattice[j].refines(lattice[i])) s += mu[j];
    mu[i] = -s;
  }
  return mu;
}

Integer mobius_from_bottom(const std::vector<BondPartition>& lattice, const BondPartition& pi) {
  auto it = std::find(lattice.begin(), lattice.end(), pi);
  if (it == lattice.end()) throw DomainError("partition " + pi.to_string() + " not in lattice");
  auto idx = static_cast<std::size_t>(it - lattice.begin());
  std::vector<BondPartition> below;
  for (std::size_t j = 0; j <= idx; ++j)
    if (lattice[j].refines(pi)) below.push_back(lattice[j]);
  return mobius_all(below).back();
}

// ------------------------------------------------------ weighted bond lattice

namespace {
void multiset_partitions(const std::vector<RootVector>& parts, std::size_t start,
                         RootVector& rest, std::vector<RootVector>& cur,
                         std::vector<WeightedBond>& out) {
  if (rest.is_zero()) {
    out.emplace_back(cur);
    return;
  }
  // parts are sorted descending; each subsequent part index >= start keeps
  // the chosen sequence non-increasing, so every multiset appears once.
  for (std::size_t i = start; i < parts.size(); ++i) {
    if (!parts[i].fits_within(rest)) continue;
    rest -= parts[i];
    cur.push_back(parts[i]);
    multiset_partitions(parts, i, rest, cur, out);
    cur.pop_back();
    rest += parts[i];
  }
}
}  // namespace

std::vector<WeightedBond> weighted_bond_lattice(const Graph& g, const WeightVector& k) {
  if (k.support().empty()) throw DomainError("weighted bond lattice needs non-empty support");
  std::vector<RootVector> parts = connected_multiset_supports(g, k);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  std::vector<WeightedBond> out;
  RootVector rest = k.eta();
  std::vector<RootVector> cur;
  multiset_partitions(parts, 0, rest, cur, out);
  std::reverse(out.begin(), out.end());  // finest first
  return out;
}

Partition bond_type(const WeightedBond& b) {
  std::vector<int> heights;
  for (const auto& p : b.parts()) heights.push_back(static_cast<int>(p.height()));
  return Partition(std::move(heights));
}

std::optional<std::vector<RootVector>> psi_image(const WeightedBond& b, const MultTable& mults) {
  for (const auto& p : b.parts())
    if (mults.at(p) < 1) return std::nullopt;
  return b.parts();
}

// ---------------------------------------------------------- stable partitions

std::vector<StablePartition> stable_partitions(const Graph& g) {
  std::vector<std::vector<VertexSet>> raw;
  std::vector<VertexSet> cur;
  set_partitions(
      g.all_vertices().mask(), cur,
      [&](std::uint64_t b) {
        for (std::uint64_t m = b; m; m &= m - 1)
          if (g.neighbour_mask(std::countr_zero(m) + 1) & b) return false;
        return true;
      },
      raw);
  std::vector<StablePartition> out;
  for (auto& blocks : raw) out.push_back({std::move(blocks)});
  return out;
}

}  // namespace chromlie
