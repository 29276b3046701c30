#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "chromlie/corpus.hpp"
#include "chromlie/verify.hpp"

using namespace chromlie;

namespace {

std::map<int, std::size_t> counts_by_size(const std::vector<Graph>& graphs) {
  std::map<int, std::size_t> counts;
  for (const Graph& g : graphs) ++counts[g.vertex_count()];
  return counts;
}

Graph relabelled(const Graph& g, const std::vector<int>& perm) {
  std::vector<Graph::Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    const int a = perm[static_cast<std::size_t>(u - 1)], b = perm[static_cast<std::size_t>(v - 1)];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph(g.vertex_count(), edges);
}

bool isomorphic_by_search(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edges().size() != b.edges().size()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.vertex_count()));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (relabelled(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph random_graph(std::mt19937& rng, int n, unsigned density) {
  std::vector<Graph::Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng() % 10 < density) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("enumerate_corpus counts") {
  const auto connected = counts_by_size(enumerate_corpus(6, true));
  CHECK(connected == std::map<int, std::size_t>{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {5, 21}, {6, 112}});
  const auto all = counts_by_size(enumerate_corpus(6, false));
  CHECK(all == std::map<int, std::size_t>{{1, 1}, {2, 2}, {3, 4}, {4, 11}, {5, 34}, {6, 156}});
  const auto small = enumerate_corpus(1, false);
  REQUIRE(small.size() == 1);
  CHECK(small.front() == Graph::edgeless(1));
  CHECK_THROWS_AS(enumerate_corpus(8, true), DomainError);
}

TEST_CASE("canonical codes are invariant under relabelling") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(rng, n, static_cast<unsigned>(rng() % 10));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabelled(g, perm);
    CHECK(canonical_code(g) == canonical_code(h));
    CHECK(canonical_code(graph_from_code(n, canonical_code(g))) == canonical_code(g));
  }
}

TEST_CASE("canonical codes agree with an exhaustive isomorphism search") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const unsigned density = 3 + static_cast<unsigned>(rng() % 4);
    const Graph a = random_graph(rng, n, density), b = random_graph(rng, n, density);
    CHECK((canonical_code(a) == canonical_code(b)) == isomorphic_by_search(a, b));
  }
}

TEST_CASE("run_verify examples") {
  VerifyOptions five;
  five.graphs = enumerate_corpus(5, true);
  const VerificationReport stanley = run_verify(Suite::stanley, five);
  CHECK(stanley.pass());
  CHECK(stanley.cases == five.graphs->size());

  VerifyOptions k2;
  k2.graphs = std::vector<Graph>{Graph::complete(2)};
  k2.height = 6;
  const VerificationReport denominator = run_verify(Suite::denominator, k2);
  CHECK(denominator.status() == "pass");
  CHECK(denominator.exit_code() == 0);

  VerifyOptions zero;
  zero.budget.max_steps = 0;
  const VerificationReport all = run_verify(Suite::all, zero);
  CHECK(all.cases > 0);
  CHECK(all.skipped == all.cases);
  CHECK(all.status() == "indeterminate");
  CHECK(all.exit_code() == 3);
}

TEST_CASE("reports are deterministic apart from timing") {
  VerifyOptions opt;
  opt.graphs = enumerate_corpus(4, true);
  const auto first = run_verify(Suite::chmply, opt).to_json(false).dump();
  const auto second = run_verify(Suite::chmply, opt).to_json(false).dump();
  CHECK(first == second);
  CHECK(run_verify(Suite::chmply, opt).to_json().contains("seconds"));
}

TEST_CASE("suite names round trip") {
  for (Suite s : {Suite::mainthm, Suite::stanley, Suite::chmply, Suite::discriminant, Suite::gsym_dual,
                  Suite::denominator, Suite::oracles, Suite::tfunction, Suite::bijection, Suite::join, Suite::all})
    CHECK(parse_suite(suite_name(s)) == s);
  CHECK_THROWS_AS(parse_suite("nope"), DomainError);
}
