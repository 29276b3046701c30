#pragma once

#include <cstdint>
#include <vector>

#include "chromlie/graph.hpp"

namespace chromlie {

/// Canonical code of a graph on at most 11 vertices: the smallest
/// upper-triangle adjacency bit string over all relabellings that list
/// vertices in non-increasing degree order. Two graphs are isomorphic iff
/// their vertex counts and codes agree.
std::uint64_t canonical_code(const Graph& g);

/// Graph on n vertices whose upper-triangle adjacency bits are `code`.
Graph graph_from_code(int n, std::uint64_t code);

/// One representative of every isomorphism class on 1..max_n vertices
/// (max_n <= 7), ordered by vertex count then canonical code.
std::vector<Graph> enumerate_corpus(int max_n, bool connected_only);

}  // namespace chromlie
