#include "chromlie/verify.hpp"

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "chromlie/chroma.hpp"
#include "chromlie/corpus.hpp"
#include "chromlie/gsym.hpp"
#include "chromlie/lattice.hpp"
#include "chromlie/root_mult.hpp"
#include "chromlie/series.hpp"
#include "chromlie/symfunc.hpp"

namespace chromlie {

namespace {

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& message) {
  if (!ok) throw CheckFailed(message);
}

template <typename Map>
std::string first_difference(const Map& a, const Map& b, const std::function<std::string(const typename Map::key_type&)>& key_name) {
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first))
      return key_name(ia->first) + ": " + to_string(ia->second) + " vs 0";
    if (ia == a.end() || ib->first < ia->first)
      return key_name(ib->first) + ": 0 vs " + to_string(ib->second);
    if (ia->second != ib->second)
      return key_name(ia->first) + ": " + to_string(ia->second) + " vs " + to_string(ib->second);
    ++ia;
    ++ib;
  }
  return "equal";
}

std::string diff(const PowerSumExpr& a, const PowerSumExpr& b) {
  return first_difference<PowerSumExpr::Terms>(
      a.terms(), b.terms(), [](const Partition& p) { return "p[" + p.to_string() + "]"; });
}

std::string diff(const NVarPoly& a, const NVarPoly& b) {
  return first_difference<NVarPoly::Terms>(a.terms(), b.terms(), [](const NVarPoly::Exponent& e) {
    return "x^" + RootVector(e).to_string();
  });
}

std::string diff(const QSeries& a, const QSeries& b) {
  return first_difference<QSeries::Terms>(a.terms(), b.terms(),
                                          [](const RootVector& e) { return "v^" + e.to_string(); });
}

class CaseRunner {
 public:
  CaseRunner(VerificationReport& report, const Budget& budget) : report_(report), budget_(budget) {}

  template <typename Body>
  void run(const Graph& g, const std::string& weights, std::uint64_t cost, Body&& body) {
    ++report_.cases;
    try {
      budget_.require(std::max<std::uint64_t>(cost, 1), "case");
      body();
    } catch (const BudgetExceeded&) {
      ++report_.skipped;
    } catch (const CheckFailed& e) {
      report_.failures.push_back({g.to_string(), weights, e.what()});
    } catch (const Error& e) {
      report_.failures.push_back({g.to_string(), weights, std::string("error: ") + e.what()});
    }
  }

 private:
  VerificationReport& report_;
  const Budget& budget_;
};

std::vector<Graph> corpus_or(const VerifyOptions& opt, int max_n, bool connected) {
  return opt.graphs ? *opt.graphs : enumerate_corpus(max_n, connected);
}

std::string corpus_name(const VerifyOptions& opt, const std::string& fallback) {
  return opt.graphs ? std::to_string(opt.graphs->size()) + " supplied graph(s)" : fallback;
}

bool connected(const Graph& g) { return is_connected(g, g.all_vertices()); }

/// All weight vectors with entries in [lo, hi], excluding the zero vector.
std::vector<WeightVector> weight_vectors(int n, int lo, int hi) {
  std::vector<WeightVector> out;
  std::vector<int> k(static_cast<std::size_t>(n), lo);
  while (true) {
    if (std::any_of(k.begin(), k.end(), [](int c) { return c > 0; })) out.emplace_back(k);
    std::size_t i = 0;
    while (i < k.size() && k[i] == hi) k[i++] = lo;
    if (i == k.size()) break;
    ++k[i];
  }
  return out;
}

std::uint64_t colouring_cost(const WeightVector& k, long q) {
  Integer total = 1;
  for (int c : k.values()) total *= binomial(Integer(q), static_cast<unsigned long>(c));
  return total.fits_ulong_p() ? total.get_ui() : ~0ULL;
}

/// k alpha_i with k >= 2.
bool is_simple_multiple(const RootVector& gamma) {
  return std::popcount(gamma.support_mask()) == 1 && gamma.height() >= 2;
}

RootVector indicator(int n, VertexSet s) {
  RootVector chi(static_cast<std::size_t>(n));
  for (int v : s.members()) chi[static_cast<std::size_t>(v - 1)] = 1;
  return chi;
}

// ------------------------------------------------------------------ suites

void suite_stanley(const VerifyOptions& opt, VerificationReport& r) {
  r.corpus = corpus_name(opt, "connected graphs on 1..6 vertices, k = 1, N = n");
  CaseRunner runner(r, opt.budget);
  for (const Graph& g : corpus_or(opt, 6, true)) {
    const int n = g.vertex_count();
    const WeightVector k = WeightVector::ones(n);
    runner.run(g, k.to_string(), colouring_cost(k, n), [&] {
      const MultTable mults = mult_table(g, n);
      const PowerSumExpr main = csf_mainthm(g, k, mults);
      const NVarPoly brute = csf_bruteforce(g, k, n, opt.budget);
      const NVarPoly expanded = powersum_expand(main, n);
      expect(expanded == brute, "root-multiplicity expansion vs colourings: " + diff(expanded, brute));
      const PowerSumExpr stanley = csf_stanley(g);
      expect(main == stanley, "root-multiplicity expansion vs Moebius form: " + diff(main, stanley));
      const PowerSumExpr literal = csf_mainthm_literal(g, k, mults);
      expect(literal == main, "closed form vs root-multiplicity expansion: " + diff(literal, main));
      const PowerSumExpr by_mult = csf_bond_multiplicities(g, mults);
      expect(by_mult == main, "bond-multiplicity form vs expansion: " + diff(by_mult, main));
    });
  }
}

void suite_mainthm(const VerifyOptions& opt, VerificationReport& r) {
  r.corpus = corpus_name(opt, "connected graphs on 1..4 vertices, k in {1,2}^n, ht <= 6, N = ht");
  CaseRunner runner(r, opt.budget);
  std::uint64_t literal_agrees = 0, literal_cases = 0;
  for (const Graph& g : corpus_or(opt, 4, true)) {
    const int n = g.vertex_count();
    std::optional<MultTable> mults;
    for (const WeightVector& k : weight_vectors(n, 1, 2)) {
      const long ht = k.height();
      if (ht > 6) continue;
      runner.run(g, k.to_string(), colouring_cost(k, ht), [&] {
        if (!mults) mults = mult_table(g, std::min(6, 2 * n));
        const PowerSumExpr main = csf_mainthm(g, k, *mults);
        const NVarPoly brute = csf_bruteforce(g, k, static_cast<int>(ht), opt.budget);
        const NVarPoly expanded = powersum_expand(main, static_cast<int>(ht));
        expect(expanded == brute, "root-multiplicity expansion vs colourings: " + diff(expanded, brute));
        // X^G_k(1^q) is the generalized chromatic polynomial
        const auto specialised = main.principal_specialization();
        const ChromaticPolynomial poly = gen_chromatic_poly(g, k, opt.budget);
        bool same = specialised.size() == poly.coeffs().size();
        for (std::size_t i = 0; same && i < specialised.size(); ++i) same = specialised[i] == poly.coeffs()[i];
        expect(same, "X(1^q) differs from the generalized chromatic polynomial " + poly.to_string());
        const bool literal_ok = csf_mainthm_literal(g, k, *mults) == main;
        ++literal_cases;
        if (literal_ok) ++literal_agrees;
        const bool repeats_impossible =
            std::all_of(k.values().begin(), k.values().end(), [](int c) { return c <= 1; });
        expect(literal_ok || !repeats_impossible, "closed form differs although no part can repeat");
      });
    }
  }
  r.notes.push_back("closed form with ordinary binomials agrees on " + std::to_string(literal_agrees) +
                    " of " + std::to_string(literal_cases) + " cases");
}

void suite_chmply(const VerifyOptions& opt, VerificationReport& r) {
  r.corpus = corpus_name(opt, "connected graphs on 1..4 vertices, k in {1,2}^n, ht <= 6");
  CaseRunner runner(r, opt.budget);
  for (const Graph& g : corpus_or(opt, 4, true)) {
    const int n = g.vertex_count();
    std::optional<MultTable> mults;
    for (const WeightVector& k : weight_vectors(n, 1, 2)) {
      const long ht = k.height();
      if (ht > 6) continue;
      runner.run(g, k.to_string(), colouring_cost(k, ht + 2), [&] {
        if (!mults) mults = mult_table(g, std::min(6, 2 * n));
        const ChromaticPolynomial poly = gen_chromatic_poly(g, k, opt.budget);
        const ChromaticPolynomial from_mults = chmply_from_mults(g, k, *mults);
        expect(poly == from_mults,
               "stable tuples give " + poly.to_string() + ", multiplicities give " + from_mults.to_string());
        for (long q = 0; q <= ht + 2; ++q) {
          const Integer brute = count_colorings_brute(g, k, q, opt.budget);
          expect(poly.evaluate(q) == Rational(brute), "value at q=" + std::to_string(q) + ": " +
                                                to_string(poly.evaluate(q)) + " vs " + to_string(brute));
        }
      });
    }
  }
}

void suite_denominator(const VerifyOptions& opt, VerificationReport& r) {
  const long h = opt.height.value_or(8);
  r.corpus = corpus_name(opt, "connected graphs on 1..5 vertices") + ", H = " + std::to_string(h);
  CaseRunner runner(r, opt.budget);
  std::uint64_t connected_non_roots = 0;
  for (const Graph& g : corpus_or(opt, 5, true)) {
    const int n = g.vertex_count();
    runner.run(g, "", 1, [&] {
      const MultTable mults = mult_table(g, h);
      const QSeries product = power_with_multiplicity(static_cast<std::size_t>(n), mults.entries(), h);
      const QSeries sum = independence_series(g, h);
      expect(product == sum, "product side vs stable-set sum: " + diff(product, sum));
      for (long ht = 1; ht <= h; ++ht)
        for (const RootVector& gamma : vectors_of_height(static_cast<std::size_t>(n), static_cast<int>(ht))) {
          const bool root = mults.at(gamma) >= 1;
          const bool expected = has_connected_support(g, gamma) && !is_simple_multiple(gamma);
          if (root != expected) {
            expect(false, "multiplicity of " + gamma.to_string() + " is " + to_string(mults.at(gamma)));
          }
          if (!root && has_connected_support(g, gamma)) ++connected_non_roots;
        }
    });
  }
  r.notes.push_back(std::to_string(connected_non_roots) +
                    " connected-support vectors with multiplicity 0, all of the form k alpha_i with k >= 2");
}

void suite_oracles(const VerifyOptions& opt, VerificationReport& r) {
  r.corpus = corpus_name(opt, "K_1..K_4 at H = 8 (Witt); all graphs on 1..4 vertices at height <= 6 (trace monoid)");
  CaseRunner runner(r, opt.budget);
  std::vector<Graph> complete;
  if (opt.graphs) {
    for (const Graph& g : *opt.graphs) {
      const int n = g.vertex_count();
      if (static_cast<int>(g.edges().size()) == n * (n - 1) / 2) complete.push_back(g);
    }
  } else {
    for (int n = 1; n <= 4; ++n) complete.push_back(Graph::complete(n));
  }
  for (const Graph& g : complete) {
    runner.run(g, "", 1, [&] {
      const MultTable mults = mult_table(g, 8);
      for (int ht = 1; ht <= 8; ++ht)
        for (const RootVector& gamma : vectors_of_height(static_cast<std::size_t>(g.vertex_count()), ht)) {
          const Integer w = witt_oracle(gamma);
          expect(mults.at(gamma) == w, "mult" + gamma.to_string() + " = " + to_string(mults.at(gamma)) +
                                           ", Witt formula gives " + to_string(w));
        }
    });
  }
  for (const Graph& g : corpus_or(opt, 4, false)) {
    runner.run(g, "", 1, [&] {
      const QSeries hilbert = series_inverse(independence_series(g, 6));
      for (int ht = 1; ht <= 6; ++ht)
        for (const RootVector& gamma : vectors_of_height(static_cast<std::size_t>(g.vertex_count()), ht)) {
          const Integer words = trace_monoid_dim(g, gamma, opt.budget);
          expect(hilbert.coefficient(gamma) == Rational(words),
                 "enveloping algebra dimension at " + gamma.to_string() + ": series " +
                     to_string(hilbert.coefficient(gamma)) + ", word classes " + to_string(words));
        }
    });
  }
}

void suite_gsym_dual(const VerifyOptions& opt, VerificationReport& r) {
  r.corpus = corpus_name(opt, "connected graphs on 1..5 vertices, degrees 1..6");
  CaseRunner runner(r, opt.budget);
  for (const Graph& g : corpus_or(opt, 5, true)) {
    const int n = g.vertex_count();
    runner.run(g, "", 1, [&] {
      const MultTable mults = mult_table(g, 6);
      for (int d = 1; d <= 6; ++d) {
        const GSymSeries via_log = powersum_g_via_log(g, d);
        const GSymSeries closed = powersum_g_closed_form(g, d, mults);
        expect(via_log == closed, "p^G_" + std::to_string(d) + " log route vs closed form: " + diff(via_log, closed));
        for (const auto& [gamma, c] : via_log.terms()) {
          expect(is_integral(c) && c > 0, "p^G_" + std::to_string(d) + " coefficient " + to_string(c));
          expect(gamma.height() == d, "p^G_" + std::to_string(d) + " not homogeneous");
        }
      }
      // stable part: the independence series is the signed sum of the e^G_i
      QSeries signed_sum(static_cast<std::size_t>(n), n);
      for (int i = 0; i <= n; ++i) {
        const GSymSeries e = elementary_g(g, i);
        for (const auto& [gamma, c] : e.terms()) {
          expect(gamma.height() == i, "e^G_" + std::to_string(i) + " not homogeneous");
          signed_sum.add_term(gamma, i % 2 == 0 ? c : Rational(-c));
        }
      }
      const QSeries indep = independence_series(g, n);
      expect(signed_sum == indep, "signed elementary sum vs independence series: " + diff(signed_sum, indep));
    });
  }
}

void suite_discriminant(const VerifyOptions& opt, VerificationReport& r) {
  r.corpus = corpus_name(opt, "connected graphs on 1..6 vertices");
  CaseRunner runner(r, opt.budget);
  struct Entry {
    std::string graph;
    Integer discriminant;
  };
  std::map<std::pair<int, std::string>, std::vector<Entry>> by_csf;
  for (const Graph& g : corpus_or(opt, 6, true)) {
    if (!connected(g)) continue;
    runner.run(g, "", 1, [&] {
      const MultTable mults = mult_table(g, g.vertex_count());
      const Integer d = chromatic_discriminant(g, mults);
      by_csf[{g.vertex_count(), csf_stanley(g).to_string()}].push_back({g.to_string(), d});
    });
  }
  std::size_t classes = 0;
  for (const auto& [key, entries] : by_csf) {
    if (entries.size() < 2) continue;
    ++classes;
    std::string line = "equal X_G:";
    for (const Entry& e : entries) line += " [" + e.graph + " disc " + to_string(e.discriminant) + "]";
    r.notes.push_back(line);
    for (const Entry& e : entries)
      if (e.discriminant != entries.front().discriminant)
        r.failures.push_back({e.graph, "", "equal chromatic symmetric functions but discriminant " +
                                               to_string(e.discriminant) + " vs " +
                                               to_string(entries.front().discriminant)});
  }
  r.notes.push_back(std::to_string(classes) + " classes of graphs with equal X_G found");
}

void suite_tfunction(const VerifyOptions& opt, VerificationReport& r) {
  r.corpus = corpus_name(opt, "connected graphs on 1..4 vertices, k in {0,1,2}^n \\ 0, N = ht");
  CaseRunner runner(r, opt.budget);
  for (const Graph& g : corpus_or(opt, 4, true)) {
    for (const WeightVector& k : weight_vectors(g.vertex_count(), 0, 2)) {
      const int nvars = static_cast<int>(k.height());
      runner.run(g, k.to_string(), colouring_cost(k, nvars), [&] {
        const NVarPoly t = t_function_coefficient(g, k, nvars, opt.budget);
        const NVarPoly brute = csf_bruteforce(g, k, nvars, opt.budget);
        expect(t == brute, "T(x,v) coefficient vs colourings: " + diff(t, brute));
      });
    }
  }
}

void suite_bijection(const VerifyOptions& opt, VerificationReport& r) {
  r.corpus = corpus_name(opt, "connected graphs on 1..5 vertices, k in {0,1,2}^n with connected support; "
                              "Moebius checks on connected graphs on 1..6 vertices");
  CaseRunner runner(r, opt.budget);
  std::uint64_t simple_multiple_rejections = 0, other_rejections = 0;
  for (const Graph& g : corpus_or(opt, 5, true)) {
    const int n = g.vertex_count();
    std::optional<MultTable> mults;
    for (const WeightVector& k : weight_vectors(n, 0, 2)) {
      if (!is_connected(g, k.support())) continue;
      runner.run(g, k.to_string(), 1, [&] {
        if (!mults) mults = mult_table(g, 2 * n);
        std::string rejected;
        for (const WeightedBond& b : weighted_bond_lattice(g, k)) {
          expect(b.sum() == k.eta(), "weighted bond does not sum to eta(k)");
          if (psi_image(b, *mults)) continue;
          for (const RootVector& part : b.parts()) {
            if (mults->at(part) >= 1) continue;
            if (is_simple_multiple(part))
              ++simple_multiple_rejections;
            else
              ++other_rejections;
            if (rejected.empty()) rejected = part.to_string();
          }
        }
        expect(rejected.empty(), "weighted bond part " + rejected + " has multiplicity 0");
      });
    }
  }
  for (const Graph& g : corpus_or(opt, 6, true)) {
    const int n = g.vertex_count();
    runner.run(g, "", 1, [&] {
      const auto lattice = bond_lattice(g);
      // k = 1: parts <-> blocks through their supports
      const auto weighted = weighted_bond_lattice(g, WeightVector::ones(n));
      expect(weighted.size() == lattice.size(), "weighted bond lattice at k=1 has " +
                                                    std::to_string(weighted.size()) + " elements, bond lattice " +
                                                    std::to_string(lattice.size()));
      std::set<std::vector<std::uint64_t>> from_weighted, from_bonds;
      for (const auto& b : weighted) {
        std::vector<std::uint64_t> masks;
        for (const auto& p : b.parts()) masks.push_back(p.support_mask());
        std::sort(masks.begin(), masks.end());
        from_weighted.insert(masks);
      }
      for (const auto& pi : lattice) {
        std::vector<std::uint64_t> masks;
        for (VertexSet blk : pi.blocks()) masks.push_back(blk.mask());
        std::sort(masks.begin(), masks.end());
        from_bonds.insert(masks);
      }
      expect(from_weighted == from_bonds, "k=1 weighted bonds and bond partitions differ");

      const MultTable mults = mult_table(g, n);
      const auto mu = mobius_all(lattice);
      Integer total = 0;
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        Integer expected = (n - lattice[i].block_count()) % 2 == 0 ? 1 : -1;
        for (VertexSet blk : lattice[i].blocks()) expected *= mults.at(indicator(n, blk));
        expect(mu[i] == expected, "mu(0," + lattice[i].to_string() + ") = " + to_string(mu[i]) +
                                      ", signed multiplicity product " + to_string(expected));
        total += mu[i];
      }
      expect(lattice.size() == 1 || total == 0, "Moebius values do not sum to zero");
    });
  }
  r.notes.push_back("weighted bond parts rejected as non-roots: " + std::to_string(simple_multiple_rejections) +
                    " of the form k alpha_i with k >= 2, " + std::to_string(other_rejections) + " other");
}

void suite_join(const VerifyOptions& opt, VerificationReport& r) {
  r.corpus = corpus_name(opt, "connected graphs on 1..3 vertices, k in {0..3}^n \\ 0");
  CaseRunner runner(r, opt.budget);
  for (const Graph& g : corpus_or(opt, 3, true)) {
    for (const WeightVector& k : weight_vectors(g.vertex_count(), 0, 3)) {
      runner.run(g, k.to_string(), 1, [&] {
        const ChromaticPolynomial lhs =
            gen_chromatic_poly(g, k, opt.budget).scaled(Rational(static_cast<unsigned long>(k.factorial_product())));
        const Graph joined = join_graph(g, k);
        const ChromaticPolynomial rhs = gen_chromatic_poly(joined, WeightVector::ones(joined.vertex_count()), opt.budget);
        expect(lhs == rhs, "k! pi_k = " + lhs.to_string() + " but the join gives " + rhs.to_string());
      });
    }
  }
}

using SuiteFn = void (*)(const VerifyOptions&, VerificationReport&);

const std::vector<std::pair<Suite, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<Suite, SuiteFn>> table{
      {Suite::mainthm, suite_mainthm},       {Suite::stanley, suite_stanley},
      {Suite::chmply, suite_chmply},         {Suite::discriminant, suite_discriminant},
      {Suite::gsym_dual, suite_gsym_dual},   {Suite::denominator, suite_denominator},
      {Suite::oracles, suite_oracles},       {Suite::tfunction, suite_tfunction},
      {Suite::bijection, suite_bijection},   {Suite::join, suite_join},
  };
  return table;
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  for (const auto& [s, fn] : suite_table())
    if (suite_name(s) == name) return s;
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::mainthm: return "mainthm";
    case Suite::stanley: return "stanley";
    case Suite::chmply: return "chmply";
    case Suite::discriminant: return "discriminant";
    case Suite::gsym_dual: return "gsym_dual";
    case Suite::denominator: return "denominator";
    case Suite::oracles: return "oracles";
    case Suite::tfunction: return "tfunction";
    case Suite::bijection: return "bijection";
    case Suite::join: return "join";
    case Suite::all: return "all";
  }
  return "unknown";
}

std::string VerificationReport::status() const {
  if (!failures.empty()) return "fail";
  if (cases > 0 && skipped == cases) return "indeterminate";
  return "pass";
}

int VerificationReport::exit_code() const {
  if (!failures.empty()) return 2;
  if (skipped > 0) return 3;
  return 0;
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures) fails.push_back({{"graph", f.graph}, {"k", f.weights}, {"detail", f.detail}});
  nlohmann::json j{{"suite", suite},     {"corpus", corpus}, {"cases", cases},
                   {"skipped", skipped}, {"failures", fails}, {"notes", notes},
                   {"pass", pass()},     {"status", status()}};
  if (with_timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", seconds);
    j["seconds"] = buf;
  }
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << suite << ": " << status() << " (" << cases << " cases, " << skipped << " skipped, "
      << failures.size() << " failures)\n";
  out << "  corpus: " << corpus << "\n";
  for (const auto& n : notes) out << "  note: " << n << "\n";
  for (const auto& f : failures) out << "  FAIL " << f.graph << (f.weights.empty() ? "" : " k=" + f.weights) << ": " << f.detail << "\n";
  return out.str();
}

VerificationReport run_verify(Suite suite, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = suite_name(suite);
  if (suite == Suite::all) {
    report.corpus = "per-suite defaults";
    for (const auto& [s, fn] : suite_table()) {
      VerificationReport part;
      fn(options, part);
      report.cases += part.cases;
      report.skipped += part.skipped;
      for (auto& f : part.failures) {
        f.detail = suite_name(s) + ": " + f.detail;
        report.failures.push_back(std::move(f));
      }
      for (auto& n : part.notes) report.notes.push_back(suite_name(s) + ": " + n);
    }
  } else {
    for (const auto& [s, fn] : suite_table())
      if (s == suite) fn(options, report);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace chromlie
