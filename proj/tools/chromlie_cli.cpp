#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chromlie/chroma.hpp"
#include "chromlie/gsym.hpp"
#include "chromlie/lattice.hpp"
#include "chromlie/root_mult.hpp"
#include "chromlie/series.hpp"
#include "chromlie/symfunc.hpp"
#include "chromlie/verify.hpp"

using namespace chromlie;
using nlohmann::json;

namespace {

struct Options {
  std::string graph_file;
  std::string format = "edge_list";
  std::string weights;
  std::optional<long> height;
  std::optional<int> nvars;
  std::string cache;
  std::string out = "json";
  std::string kind = "e";
  int degree = 1;
  bool expand = false;
  std::string suite = "all";
  std::optional<std::uint64_t> budget;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph load_graph(const Options& o) {
  if (o.graph_file.empty()) throw UsageError("--graph is required");
  std::string text;
  if (o.graph_file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.graph_file);
    if (!in) throw UsageError("cannot read " + o.graph_file);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_graph(text, parse_graph_format(o.format));
}

WeightVector load_weights(const Options& o, const Graph& g) {
  if (o.weights.empty()) return WeightVector::ones(g.vertex_count());
  WeightVector k = WeightVector::parse(o.weights);
  if (static_cast<int>(k.values().size()) != g.vertex_count())
    throw UsageError("--weights has " + std::to_string(k.values().size()) + " entries, graph has " +
                     std::to_string(g.vertex_count()) + " vertices");
  return k;
}

MultTable load_mults(const Options& o, const Graph& g, long bound) {
  if (o.cache.empty()) return mult_table(g, bound);
  return mult_table_cached(g, bound, o.cache);
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.out == "text")
    std::cout << text;
  else
    std::cout << j.dump(2) << "\n";
}

int cmd_mult(const Options& o) {
  const Graph g = load_graph(o);
  const WeightVector k = load_weights(o, g);
  const long bound = o.height.value_or(k.height());
  const MultTable t = load_mults(o, g, bound);
  std::ostringstream text;
  for (const auto& [gamma, m] : t.entries()) text << gamma.to_string() << " " << to_string(m) << "\n";
  emit(o, mult_table_to_json(t), text.str());
  return 0;
}

int cmd_chrompoly(const Options& o) {
  const Graph g = load_graph(o);
  const WeightVector k = load_weights(o, g);
  const ChromaticPolynomial p = gen_chromatic_poly(g, k);
  json coeffs = json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(to_string(c));
  emit(o, json{{"coeffs", coeffs}}, p.to_string() + "\n");
  return 0;
}

int cmd_csf(const Options& o) {
  const Graph g = load_graph(o);
  const WeightVector k = load_weights(o, g);
  const MultTable t = load_mults(o, g, std::max(k.height(), o.height.value_or(0)));
  const PowerSumExpr x = csf_mainthm(g, k, t);
  json j = powersum_to_json(x);
  std::string text = x.to_string() + "\n";
  if (o.expand || o.nvars) {
    const NVarPoly e = powersum_expand(x, o.nvars.value_or(static_cast<int>(k.height())));
    j["expansion"] = nvarpoly_to_json(e);
    text += e.to_string() + "\n";
  }
  emit(o, j, text);
  return 0;
}

int cmd_gsym(const Options& o) {
  const Graph g = load_graph(o);
  GSymSeries s(static_cast<std::size_t>(g.vertex_count()), o.degree);
  if (o.kind == "e") {
    s = elementary_g(g, o.degree);
  } else if (o.kind == "p") {
    s = powersum_g_via_log(g, o.degree);
  } else {
    throw UsageError("--kind must be e or p");
  }
  emit(o, series_to_json(s), s.to_string() + "\n");
  return 0;
}

int cmd_bondlattice(const Options& o) {
  const Graph g = load_graph(o);
  const WeightVector k = load_weights(o, g);
  const auto bonds = weighted_bond_lattice(g, k);
  std::vector<BondPartition> lattice;
  std::vector<Integer> mu;
  if (k.is_all_ones()) {
    lattice = bond_lattice(g);
    mu = mobius_all(lattice);
  }
  json out = json::array();
  std::ostringstream text;
  for (const WeightedBond& b : bonds) {
    json parts = json::array();
    for (const RootVector& p : b.parts()) parts.push_back(p.coords());
    json entry{{"parts", parts}, {"type", bond_type(b).parts()}, {"mobius", nullptr}};
    std::string line;
    for (const RootVector& p : b.parts()) line += p.to_string();
    line += " type " + bond_type(b).to_string();
    if (k.is_all_ones()) {
      std::vector<VertexSet> blocks;
      for (const RootVector& p : b.parts()) blocks.push_back(VertexSet::from_mask(p.support_mask()));
      const BondPartition pi(blocks);
      for (std::size_t i = 0; i < lattice.size(); ++i)
        if (lattice[i] == pi) {
          entry["mobius"] = mu[i].get_si();
          line += " mobius " + to_string(mu[i]);
        }
    }
    out.push_back(entry);
    text << line << "\n";
  }
  emit(o, out, text.str());
  return 0;
}

int cmd_verify(const Options& o) {
  VerifyOptions v;
  if (!o.graph_file.empty()) v.graphs = std::vector<Graph>{load_graph(o)};
  v.height = o.height;
  if (o.budget) v.budget.max_steps = *o.budget;
  const VerificationReport r = run_verify(parse_suite(o.suite), v);
  emit(o, r.to_json(), r.to_text());
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic symmetric functions, chromatic polynomials and root multiplicities of graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--graph", o.graph_file, "graph file (- for stdin)");
  app.add_option("--format", o.format, "edge_list or json")->check(CLI::IsMember({"edge_list", "json"}));
  app.add_option("--weights", o.weights, "comma-separated vertex weights k1,k2,...");
  app.add_option("--height", o.height, "truncation height");
  app.add_option("--nvars", o.nvars, "number of variables in the expansion");
  app.add_option("--cache", o.cache, "multiplicity cache file");
  app.add_option("--out", o.out, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* mult = app.add_subcommand("mult", "root multiplicities up to the given height");
  auto* chrompoly = app.add_subcommand("chrompoly", "generalized chromatic polynomial");
  auto* csf = app.add_subcommand("csf", "chromatic symmetric function in power sums");
  csf->add_flag("--expand", o.expand, "also expand in N variables");
  auto* gsym = app.add_subcommand("gsym", "graph analogues of e_n and p_n");
  gsym->add_option("--kind", o.kind, "e or p")->check(CLI::IsMember({"e", "p"}));
  gsym->add_option("--degree", o.degree, "degree n")->check(CLI::NonNegativeNumber);
  auto* bond = app.add_subcommand("bondlattice", "weighted bond lattice");
  auto* verify = app.add_subcommand("verify", "run an identity check suite");
  verify->add_option("suite", o.suite, "suite name or all");
  verify->add_option("--budget", o.budget, "per-case step budget");
  for (auto* sub : {mult, chrompoly, csf, gsym, bond, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*mult) return cmd_mult(o);
    if (*chrompoly) return cmd_chrompoly(o);
    if (*csf) return cmd_csf(o);
    if (*gsym) return cmd_gsym(o);
    if (*bond) return cmd_bondlattice(o);
    if (*verify) return cmd_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
