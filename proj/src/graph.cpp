#include "chromlie/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>
#include <sstream>

#include <json.hpp>

#include "chromlie/error.hpp"

namespace chromlie {

// ---------------------------------------------------------------- VertexSet

VertexSet VertexSet::of(std::initializer_list<int> members) {
  std::uint64_t m = 0;
  for (int v : members) {
    if (v < 1 || v > Graph::kMaxVertices) throw DomainError("vertex id out of range");
    m |= std::uint64_t{1} << (v - 1);
  }
  return VertexSet(m);
}

int VertexSet::size() const { return std::popcount(mask_); }

int VertexSet::min() const {
  if (mask_ == 0) throw DomainError("min of empty vertex set");
  return std::countr_zero(mask_) + 1;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.members() <=> b.members();
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 1 || n > kMaxVertices)
    throw DomainError("vertex count must be in 1.." + std::to_string(kMaxVertices));
  for (auto [u, v] : edges) {
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n) throw DomainError("edge endpoint out of range");
    if (adjacent(u, v))
      throw DomainError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u - 1] |= std::uint64_t{1} << (v - 1);
    adj_[v - 1] |= std::uint64_t{1} << (u - 1);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::complete(int n) {
  std::vector<Edge> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
  std::vector<Edge> e;
  for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
  if (n >= 3) e.emplace_back(1, n);
  return Graph(n, std::move(e));
}

Graph Graph::edgeless(int n) { return Graph(n, {}); }

int Graph::degree(int v) const { return std::popcount(adj_[v - 1]); }

VertexSet Graph::all_vertices() const {
  return VertexSet::from_mask(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1);
}

std::string Graph::to_string() const {
  std::string s = "n=" + std::to_string(n_) + ";";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(edges_[i].first) + "-" + std::to_string(edges_[i].second);
  }
  return s;
}

// ------------------------------------------------------------- WeightVector

WeightVector::WeightVector(std::vector<int> k) : k_(std::move(k)) {
  for (int c : k_)
    if (c < 0) throw DomainError("negative weight");
}

WeightVector WeightVector::parse(std::string_view text) {
  std::vector<int> k;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value < 0)
      throw DomainError("bad weight entry '" + std::string(item) + "'");
    k.push_back(value);
    pos = comma + 1;
  }
  return WeightVector(std::move(k));
}

long WeightVector::height() const {
  long h = 0;
  for (int c : k_) h += c;
  return h;
}

VertexSet WeightVector::support() const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < k_.size(); ++i)
    if (k_[i] > 0) m |= std::uint64_t{1} << i;
  return VertexSet::from_mask(m);
}

bool WeightVector::is_all_ones() const {
  return std::all_of(k_.begin(), k_.end(), [](int c) { return c == 1; });
}

unsigned long long WeightVector::factorial_product() const {
  unsigned long long r = 1;
  for (int c : k_)
    for (int j = 2; j <= c; ++j) r *= static_cast<unsigned long long>(j);
  return r;
}

std::string WeightVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < k_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(k_[i]);
  }
  return s;
}

// ------------------------------------------------------------------ parsing

namespace {

bool parse_int(std::string_view tok, long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

Graph build_graph(long declared_n, std::set<Graph::Edge>& edges,
                  const std::vector<std::pair<Graph::Edge, std::size_t>>& raw) {
  long n = declared_n;
  if (n < 0) {
    n = 0;
    for (auto& [e, line] : raw) n = std::max<long>({n, e.first, e.second});
  }
  if (n < 1) throw ParseError(1, "graph has no vertices");
  if (n > Graph::kMaxVertices)
    throw ParseError(1, "more than " + std::to_string(Graph::kMaxVertices) + " vertices");
  return Graph(static_cast<int>(n), std::vector<Graph::Edge>(edges.begin(), edges.end()));
}

Graph parse_edge_list(std::string_view text) {
  long declared_n = -1;
  bool seen_content = false;
  std::set<Graph::Edge> edges;
  std::vector<std::pair<Graph::Edge, std::size_t>> raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    line = line.substr(0, line.find('#'));
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "vertices") {
      if (seen_content) throw ParseError(line_no, "'vertices' directive must come first");
      if (toks.size() != 2 || !parse_int(toks[1], declared_n) || declared_n < 1)
        throw ParseError(line_no, "malformed 'vertices' directive");
      seen_content = true;
      continue;
    }
    seen_content = true;
    long u = 0, v = 0;
    if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
      throw ParseError(line_no, "expected '<u> <v>'");
    if (u < 1 || v < 1) throw ParseError(line_no, "vertex ids start at 1");
    if (declared_n >= 0 && (u > declared_n || v > declared_n))
      throw ParseError(line_no, "vertex id exceeds declared count " + std::to_string(declared_n));
    if (u > Graph::kMaxVertices || v > Graph::kMaxVertices)
      throw ParseError(line_no, "vertex id too large");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    Graph::Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    edges.insert(e);
    raw.emplace_back(e, line_no);
  }
  return build_graph(declared_n, edges, raw);
}

Graph parse_json_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
    throw ParseError(1, "JSON graph needs integer field \"n\"");
  long n = doc["n"].get<long>();
  if (n < 1) throw ParseError(1, "\"n\" must be positive");
  std::set<Graph::Edge> edges;
  std::vector<std::pair<Graph::Edge, std::size_t>> raw;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError(1, "\"edges\" must be an array");
    std::size_t idx = 0;
    for (const auto& item : doc["edges"]) {
      ++idx;
      if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
          !item[1].is_number_integer())
        throw ParseError(1, "edge #" + std::to_string(idx) + " is not a pair of integers");
      long u = item[0].get<long>(), v = item[1].get<long>();
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError(1, "edge #" + std::to_string(idx) + " has an out-of-range vertex");
      if (u == v) throw ParseError(1, "edge #" + std::to_string(idx) + " is a self-loop");
      Graph::Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
      edges.insert(e);
      raw.emplace_back(e, 1);
    }
  }
  return build_graph(n, edges, raw);
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::json ? parse_json_graph(text) : parse_edge_list(text);
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edge_list") return GraphFormat::edge_list;
  if (name == "json") return GraphFormat::json;
  throw DomainError("unknown graph format '" + std::string(name) + "'");
}

// --------------------------------------------------------------- structure

bool is_connected(const Graph& g, VertexSet s) {
  if (s.empty()) throw DomainError("connectivity of the empty set");
  const std::uint64_t target = s.mask();
  std::uint64_t seen = std::uint64_t{1} << (s.min() - 1);
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1)
      next |= g.neighbour_mask(std::countr_zero(f) + 1);
    next &= target & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == target;
}

bool has_connected_support(const Graph& g, const RootVector& v) {
  if (v.is_zero()) return false;
  return is_connected(g, VertexSet::from_mask(v.support_mask()));
}

namespace {
void extend_stable(const Graph& g, int next, std::uint64_t cur, std::uint64_t forbidden,
                   int left, std::vector<VertexSet>& out) {
  out.push_back(VertexSet::from_mask(cur));
  if (left == 0) return;
  for (int v = next; v <= g.vertex_count(); ++v) {
    std::uint64_t bit = std::uint64_t{1} << (v - 1);
    if (forbidden & bit) continue;
    extend_stable(g, v + 1, cur | bit, forbidden | g.neighbour_mask(v), left - 1, out);
  }
}
}  // namespace

std::vector<VertexSet> stable_sets(const Graph& g, int max_size) {
  if (max_size < 0) throw DomainError("negative max_size");
  std::vector<VertexSet> out;
  extend_stable(g, 1, 0, 0, max_size, out);
  std::sort(out.begin(), out.end());
  return out;
}

int independence_number(const Graph& g) {
  int best = 0;
  for (VertexSet s : stable_sets(g, g.vertex_count())) best = std::max(best, s.size());
  return best;
}

std::vector<RootVector> connected_multiset_supports(const Graph& g, const WeightVector& k) {
  if (static_cast<int>(k.size()) != g.vertex_count())
    throw DomainError("weight vector length differs from vertex count");
  std::vector<RootVector> out;
  RootVector m(k.size());
  const std::size_t n = k.size();
  while (true) {
    std::size_t i = 0;
    while (i < n && m[i] == k[i]) m[i++] = 0;
    if (i == n) break;
    ++m[i];
    if (has_connected_support(g, m)) out.push_back(m);
  }
  return out;
}

}  // namespace chromlie
