#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "chromlie/chroma.hpp"
#include "chromlie/graph.hpp"
#include "chromlie/rational.hpp"
#include "chromlie/series.hpp"
#include "chromlie/symfunc.hpp"

namespace testing {

using namespace chromlie;

inline QSeries make_series(std::size_t n, long bound, const std::vector<std::pair<RootVector, long>>& terms) {
  QSeries s(n, bound);
  for (const auto& [e, c] : terms) s.add_term(e, Rational(c));
  return s;
}

inline ChromaticPolynomial make_poly(const std::vector<Rational>& coeffs) { return ChromaticPolynomial(coeffs); }

inline NVarPoly make_nvar(int nvars, const std::vector<std::pair<std::vector<int>, long>>& terms) {
  NVarPoly p(nvars);
  for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
  return p;
}

/// Chromatic polynomial of a simple graph by deletion-contraction, with
/// parallel edges collapsed after each contraction.
inline std::vector<Integer> deletion_contraction(int n, std::set<std::pair<int, int>> edges) {
  if (edges.empty()) {
    std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
    p[static_cast<std::size_t>(n)] = 1;
    return p;
  }
  const auto [u, v] = *edges.begin();
  std::set<std::pair<int, int>> deleted = edges;
  deleted.erase(deleted.begin());
  std::set<std::pair<int, int>> contracted;
  auto relabel = [&](int w) {
    if (w == v) w = u;
    return w > v ? w - 1 : w;
  };
  for (const auto& [a, b] : deleted) {
    int x = relabel(a), y = relabel(b);
    if (x == y) continue;
    contracted.insert({std::min(x, y), std::max(x, y)});
  }
  std::vector<Integer> p = deletion_contraction(n, deleted);
  const std::vector<Integer> c = deletion_contraction(n - 1, contracted);
  for (std::size_t i = 0; i < c.size(); ++i) p[i] -= c[i];
  return p;
}

inline ChromaticPolynomial deletion_contraction(const Graph& g) {
  std::set<std::pair<int, int>> edges(g.edges().begin(), g.edges().end());
  std::vector<Rational> coeffs;
  for (const Integer& c : deletion_contraction(g.vertex_count(), edges)) coeffs.emplace_back(c);
  return ChromaticPolynomial(coeffs);
}

}  // namespace testing
