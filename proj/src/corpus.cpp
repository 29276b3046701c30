#include "chromlie/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "chromlie/error.hpp"

namespace chromlie {

namespace {

constexpr int kMaxCanonical = 11;

// Bit index of pair (i, j), i < j, 0-based, in row-major upper-triangle order.
int pair_bit(int n, int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); }

std::uint64_t code_under(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))
        code |= std::uint64_t{1} << (63 - pair_bit(n, i, j));
  return code;
}

// Tries every arrangement within each equal-degree block of `order`.
void permute_blocks(const Graph& g, std::vector<int>& order, const std::vector<std::size_t>& starts,
                    std::size_t block, std::uint64_t& best) {
  if (block + 1 == starts.size()) {
    best = std::min(best, code_under(g, order));
    return;
  }
  auto first = order.begin() + static_cast<std::ptrdiff_t>(starts[block]);
  auto last = order.begin() + static_cast<std::ptrdiff_t>(starts[block + 1]);
  std::sort(first, last);
  do {
    permute_blocks(g, order, starts, block + 1, best);
  } while (std::next_permutation(first, last));
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxCanonical) throw DomainError("canonical_code supports at most 11 vertices");
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<std::size_t> starts{0};
  for (std::size_t i = 1; i < order.size(); ++i)
    if (g.degree(order[i]) != g.degree(order[i - 1])) starts.push_back(i);
  starts.push_back(order.size());
  std::uint64_t best = ~std::uint64_t{0};
  permute_blocks(g, order, starts, 0, best);
  // Left-aligned codes compare like bit strings; shift down for storage.
  const int bits = n * (n - 1) / 2;
  return bits == 0 ? 0 : best >> (64 - bits);
}

Graph graph_from_code(int n, std::uint64_t code) {
  const int bits = n * (n - 1) / 2;
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((code >> (bits - 1 - pair_bit(n, i, j))) & 1U) edges.emplace_back(i + 1, j + 1);
  return Graph(n, std::move(edges));
}

std::vector<Graph> enumerate_corpus(int max_n, bool connected_only) {
  if (max_n < 1) throw DomainError("enumerate_corpus needs max_n >= 1");
  if (max_n > 7) throw DomainError("enumerate_corpus supports max_n <= 7");
  std::vector<Graph> out;
  std::vector<Graph> level{Graph::edgeless(1)};
  for (int n = 1;; ++n) {
    for (const Graph& g : level)
      if (!connected_only || is_connected(g, g.all_vertices())) out.push_back(g);
    if (n == max_n) break;
    // Every graph on n+1 vertices is some graph on n vertices plus a new
    // vertex joined to an arbitrary subset.
    std::set<std::uint64_t> codes;
    for (const Graph& g : level) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << n); ++nb) {
        std::vector<Graph::Edge> edges = g.edges();
        for (int v = 1; v <= n; ++v)
          if ((nb >> (v - 1)) & 1U) edges.emplace_back(v, n + 1);
        codes.insert(canonical_code(Graph(n + 1, std::move(edges))));
      }
    }
    level.clear();
    for (std::uint64_t c : codes) level.push_back(graph_from_code(n + 1, c));
  }
  return out;
}

}  // namespace chromlie
