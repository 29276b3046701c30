#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromlie/root_vector.hpp"

namespace chromlie {

/// A subset of the vertex set {1..n}, stored as a bitmask (vertex v -> bit v-1).
///
/// Canonical order: by size, then lexicographically on the sorted members.
class VertexSet {
 public:
  VertexSet() = default;
  static VertexSet from_mask(std::uint64_t mask) { return VertexSet(mask); }
  static VertexSet of(std::initializer_list<int> members);

  std::uint64_t mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  int size() const;
  bool contains(int v) const { return (mask_ >> (v - 1)) & 1U; }
  int min() const;
  std::vector<int> members() const;

  friend bool operator==(VertexSet, VertexSet) = default;
  friend std::strong_ordering operator<=>(VertexSet a, VertexSet b);

 private:
  explicit VertexSet(std::uint64_t mask) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

/// Finite simple graph on vertices 1..n (n <= 64).
class Graph {
 public:
  using Edge = std::pair<int, int>;
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  /// Throws DomainError on a self-loop, a duplicate edge or an out-of-range id.
  Graph(int n, std::vector<Edge> edges);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph edgeless(int n);

  int vertex_count() const { return n_; }
  /// Sorted list of pairs (u, v) with u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  bool adjacent(int u, int v) const { return (adj_[u - 1] >> (v - 1)) & 1U; }
  /// Neighbours of v as a bitmask (bit i is vertex i+1).
  std::uint64_t neighbour_mask(int v) const { return adj_[v - 1]; }
  int degree(int v) const;
  VertexSet all_vertices() const;

  /// "n=3;1-2,2-3"
  std::string to_string() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

/// Multiplicity tuple k = (k_1..k_n); eta(k) is the same data as a RootVector.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<int> k);
  static WeightVector ones(int n) { return WeightVector(std::vector<int>(n, 1)); }
  /// Comma-separated list, e.g. "2,1,1".
  static WeightVector parse(std::string_view text);

  std::size_t size() const { return k_.size(); }
  int operator[](std::size_t i) const { return k_[i]; }
  const std::vector<int>& values() const { return k_; }
  RootVector eta() const { return RootVector(k_); }
  long height() const;
  VertexSet support() const;
  bool is_all_ones() const;
  /// Product of k_i!.
  unsigned long long factorial_product() const;
  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<int> k_;
};

enum class GraphFormat { edge_list, json };

/// Parses the edge-list format (`# comment`, optional `vertices <n>`, then
/// `<u> <v>` per line) or the JSON form {"n": .., "edges": [[u,v],..]}.
/// Errors name the offending line (line 1 for JSON structure errors).
Graph parse_graph(std::string_view text, GraphFormat format);
GraphFormat parse_graph_format(std::string_view name);

/// Whether the subgraph induced on s is connected. Throws on empty s.
bool is_connected(const Graph& g, VertexSet s);

/// All independent sets of size <= max_size, including the empty set,
/// ordered by size then lexicographically.
std::vector<VertexSet> stable_sets(const Graph& g, int max_size);

int independence_number(const Graph& g);

/// All non-zero m <= k (coordinatewise) whose support is connected in g,
/// enumerated odometer-style with the first coordinate varying fastest.
std::vector<RootVector> connected_multiset_supports(const Graph& g, const WeightVector& k);

/// Connectedness of the support of a root vector.
bool has_connected_support(const Graph& g, const RootVector& v);

}  // namespace chromlie
